// Page bootstrap: wire the form, category select, results container, and
// related panel together against the service base URL.

import { ApiClient } from "./api";
import { SearchController } from "./controller";
import { debounce } from "./debounce";
import { RelatedExplorer } from "./related";
import { renderCategoryOptions, renderSearchPage } from "./render";
import { ALL_CATEGORIES } from "./types";

export function bootstrap(doc: Document, baseUrl = ""): void {
  const form = doc.querySelector<HTMLFormElement>("#search-form")!;
  const input = doc.querySelector<HTMLInputElement>("#search-input")!;
  const select = doc.querySelector<HTMLSelectElement>("#category-select")!;
  const results = doc.querySelector<HTMLElement>("#results")!;
  const panel = doc.querySelector<HTMLElement>("#related-panel")!;

  const api = new ApiClient(baseUrl);
  const explorer = new RelatedExplorer(api, panel);
  const controller = new SearchController(api, (state) => {
    renderSearchPage(results, state, (docId) => void explorer.explore(docId));
  });

  api
    .categories()
    .then((body) => renderCategoryOptions(select, body.categories, ALL_CATEGORIES))
    .catch(() => renderCategoryOptions(select, [], ALL_CATEGORIES));

  const debouncedSubmit = debounce(() => void controller.submit(input.value), 300);

  input.addEventListener("input", debouncedSubmit);
  select.addEventListener("change", () => {
    controller.setCategory(select.value);
    if (input.value.trim()) void controller.submit(input.value);
  });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    debouncedSubmit.cancel();
    void controller.submit(input.value);
  });
}

declare global {
  interface Window {
    NEWSSEARCH_BASE_URL?: string;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () =>
    bootstrap(document, window.NEWSSEARCH_BASE_URL ?? "")
  );
}
