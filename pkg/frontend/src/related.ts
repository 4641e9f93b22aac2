// Related-article exploration loop: look up neighbors of a document, let
// a click on a neighbor re-center the panel on it.

import { renderRelatedPanel } from "./render";
import type { RelatedResponse } from "./types";

export interface RelatedApi {
  related(docId: number, k?: number): Promise<RelatedResponse>;
}

export class RelatedExplorer {
  private ticket = 0;

  constructor(
    private readonly api: RelatedApi,
    private readonly panel: HTMLElement,
    private readonly k = 5
  ) {}

  async explore(docId: number): Promise<void> {
    const myTicket = ++this.ticket;
    try {
      const response = await this.api.related(docId, this.k);
      if (myTicket !== this.ticket) return;
      renderRelatedPanel(this.panel, response, (next) => void this.explore(next));
    } catch {
      if (myTicket !== this.ticket) return;
      renderRelatedPanel(this.panel, "no-data", () => undefined);
    }
  }
}
