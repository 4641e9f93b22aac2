// Query state management with supersede semantics: one search is in
// flight at a time conceptually, and a stale response (an earlier ticket
// than the latest submission) is dropped instead of overwriting newer
// results.

import { ApiError } from "./api";
import {
  ALL_CATEGORIES,
  initialState,
  SearchResponse,
  UiQueryState,
} from "./types";

export interface SearchApi {
  search(params: {
    q: string;
    category?: string;
    limit?: number;
  }): Promise<SearchResponse>;
}

export type StateListener = (state: UiQueryState) => void;

export class SearchController {
  private state: UiQueryState = initialState();
  private ticket = 0;

  constructor(
    private readonly api: SearchApi,
    private readonly onChange: StateListener
  ) {}

  getState(): UiQueryState {
    return this.state;
  }

  private update(patch: Partial<UiQueryState>): void {
    this.state = { ...this.state, ...patch };
    this.onChange(this.state);
  }

  setCategory(category: string): void {
    this.update({ category });
  }

  /** Submit a search; empty text is inline validation, not a request. */
  async submit(text: string): Promise<void> {
    if (!text.trim()) {
      this.update({ text, validation: "Enter a search term.", loading: false });
      return;
    }
    const myTicket = ++this.ticket;
    this.update({ text, validation: null, loading: true });
    const category =
      this.state.category === ALL_CATEGORIES ? undefined : this.state.category;
    try {
      const response = await this.api.search({
        q: text,
        category,
        limit: this.state.limit,
      });
      if (myTicket !== this.ticket) return; // superseded while in flight
      this.update({ lastResponse: response, error: null, loading: false });
    } catch (err) {
      if (myTicket !== this.ticket) return;
      if (err instanceof ApiError) {
        this.update({
          error: { code: err.code, message: err.message },
          loading: false,
        });
      } else {
        this.update({
          error: { code: "unreachable", message: "service not reachable" },
          loading: false,
        });
      }
    }
  }
}
