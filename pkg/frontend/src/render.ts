// DOM rendering. Pure presentation: rows appear in the order the service
// returned them, and every number shown is verbatim from the payload.

import type { RelatedResponse, SearchResultItem, UiQueryState } from "./types";

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function substitutionBanner(doc: Document, subs: Record<string, string>): HTMLElement {
  const used = Object.values(subs)
    .map((term) => `'${term}'`)
    .join(", ");
  return el(doc, "div", "fuzzy-banner", `showing results for ${used}`);
}

function resultRow(
  doc: Document,
  item: SearchResultItem,
  onExplore: (docId: number) => void
): HTMLElement {
  const row = el(doc, "li", "result-row");
  row.dataset.docId = String(item.id);

  const title = el(doc, "a", "result-title", item.title);
  title.setAttribute("href", item.url);
  row.appendChild(title);

  row.appendChild(el(doc, "span", "label-chip", item.label));
  row.appendChild(el(doc, "span", "result-date", item.dt));
  row.appendChild(el(doc, "span", "result-score", item.score.toFixed(4)));

  const badge = el(
    doc,
    "span",
    `sentiment-badge badge-${item.sentiment.class}`,
    item.sentiment.class
  );
  badge.title = `polarity ${item.sentiment.polarity}`;
  row.appendChild(badge);

  const explore = el(doc, "button", "related-button", "related");
  explore.addEventListener("click", () => onExplore(item.id));
  row.appendChild(explore);

  return row;
}

export function renderSearchPage(
  container: HTMLElement,
  state: UiQueryState,
  onExplore: (docId: number) => void
): void {
  const doc = container.ownerDocument;
  container.replaceChildren();

  if (state.validation) {
    container.appendChild(el(doc, "div", "validation-message", state.validation));
    return;
  }
  if (state.error) {
    container.appendChild(
      el(doc, "div", "error-banner", `error ${state.error.code}: ${state.error.message}`)
    );
    return;
  }
  const response = state.lastResponse;
  if (!response) {
    return;
  }
  if (response.category_unknown) {
    container.appendChild(
      el(doc, "div", "error-banner", `unknown category: ${state.category}`)
    );
    return;
  }

  const substitutions = response.results[0]?.fuzzy_substitutions ?? {};
  if (Object.keys(substitutions).length > 0) {
    container.appendChild(substitutionBanner(doc, substitutions));
  }

  if (response.results.length === 0) {
    container.appendChild(el(doc, "div", "no-results", "no results"));
    return;
  }

  const list = el(doc, "ul", "result-list");
  for (const item of response.results) {
    list.appendChild(resultRow(doc, item, onExplore));
  }
  container.appendChild(list);
  container.appendChild(
    el(
      doc,
      "div",
      "result-count",
      `${response.results.length} shown of ${response.total_candidates} candidates`
    )
  );
}

export function renderRelatedPanel(
  panel: HTMLElement,
  response: RelatedResponse | "no-data" | null,
  onRecenter: (docId: number) => void
): void {
  const doc = panel.ownerDocument;
  panel.replaceChildren();
  if (response === null) {
    return;
  }
  if (response === "no-data") {
    panel.appendChild(el(doc, "div", "related-empty", "no data"));
    return;
  }
  panel.appendChild(el(doc, "div", "related-heading", `related to #${response.id}`));
  if (response.related.length === 0) {
    panel.appendChild(el(doc, "div", "related-empty", "no related articles"));
    return;
  }
  const list = el(doc, "ul", "related-list");
  for (const entry of response.related) {
    const row = el(doc, "li", "related-row");
    row.dataset.docId = String(entry.id);
    const link = el(doc, "a", "related-title", entry.title ?? `document ${entry.id}`);
    link.setAttribute("href", "#");
    link.addEventListener("click", (event) => {
      event.preventDefault();
      onRecenter(entry.id);
    });
    row.appendChild(link);
    if (entry.label) row.appendChild(el(doc, "span", "label-chip", entry.label));
    row.appendChild(el(doc, "span", "related-similarity", entry.similarity.toFixed(4)));
    list.appendChild(row);
  }
  panel.appendChild(list);
}

export function renderCategoryOptions(
  select: HTMLSelectElement,
  categories: string[],
  allLabel: string
): void {
  const doc = select.ownerDocument;
  select.replaceChildren();
  for (const category of [allLabel, ...categories]) {
    const option = doc.createElement("option");
    option.value = category;
    option.textContent = category;
    select.appendChild(option);
  }
}
