import { beforeEach, describe, expect, it, vi } from "vitest";

import { renderRelatedPanel, renderSearchPage, renderCategoryOptions } from "../src/render";
import { initialState, UiQueryState } from "../src/types";
import { resultItem, searchResponse, threeResults } from "./fixtures";

let container: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = "<div id='c'></div>";
  container = document.getElementById("c")!;
});

function stateWith(patch: Partial<UiQueryState>): UiQueryState {
  return { ...initialState(), ...patch };
}

describe("renderSearchPage", () => {
  it("renders rows in response order with correct badge classes", () => {
    renderSearchPage(container, stateWith({ lastResponse: threeResults() }), () => {});
    const rows = [...container.querySelectorAll(".result-row")];
    expect(rows.map((r) => (r as HTMLElement).dataset.docId)).toEqual(["5", "2", "9"]);
    const badges = [...container.querySelectorAll(".sentiment-badge")];
    expect(badges.map((b) => b.className)).toEqual([
      "sentiment-badge badge-positive",
      "sentiment-badge badge-neutral",
      "sentiment-badge badge-negative",
    ]);
    expect(badges.map((b) => b.textContent)).toEqual(["positive", "neutral", "negative"]);
  });

  it("shows payload numbers verbatim", () => {
    const item = resultItem({ score: 2.5, sentiment: { positive: 2, negative: -1, neutral: 0, polarity: 0.3333333333333333, class: "positive" } });
    renderSearchPage(container, stateWith({ lastResponse: searchResponse([item]) }), () => {});
    expect(container.querySelector(".result-score")!.textContent).toBe("2.5000");
    const badge = container.querySelector<HTMLElement>(".sentiment-badge")!;
    expect(badge.title).toBe("polarity 0.3333333333333333");
  });

  it("links each title to the result url and shows the label chip", () => {
    renderSearchPage(container, stateWith({ lastResponse: searchResponse([resultItem()]) }), () => {});
    const link = container.querySelector<HTMLAnchorElement>(".result-title")!;
    expect(link.getAttribute("href")).toBe("http://example.org/1");
    expect(container.querySelector(".label-chip")!.textContent).toBe("nature");
  });

  it("shows the fuzzy banner exactly when substitutions are present", () => {
    const withSubs = searchResponse([
      resultItem({ fuzzy_substitutions: { everad: "everard" } }),
    ]);
    renderSearchPage(container, stateWith({ lastResponse: withSubs }), () => {});
    expect(container.querySelector(".fuzzy-banner")!.textContent).toBe(
      "showing results for 'everard'"
    );

    renderSearchPage(container, stateWith({ lastResponse: threeResults() }), () => {});
    expect(container.querySelector(".fuzzy-banner")).toBeNull();
  });

  it("renders inline validation without results", () => {
    renderSearchPage(container, stateWith({ validation: "Enter a search term." }), () => {});
    expect(container.querySelector(".validation-message")!.textContent).toBe(
      "Enter a search term."
    );
    expect(container.querySelector(".result-list")).toBeNull();
  });

  it("renders the service error code in a banner", () => {
    renderSearchPage(
      container,
      stateWith({ error: { code: "empty_query", message: "no terms" } }),
      () => {}
    );
    expect(container.querySelector(".error-banner")!.textContent).toContain("empty_query");
  });

  it("flags an unknown category", () => {
    renderSearchPage(
      container,
      stateWith({
        category: "Mars",
        lastResponse: searchResponse([], { category_unknown: true }),
      }),
      () => {}
    );
    expect(container.querySelector(".error-banner")!.textContent).toContain("Mars");
  });

  it("reports an empty result set", () => {
    renderSearchPage(container, stateWith({ lastResponse: searchResponse([]) }), () => {});
    expect(container.querySelector(".no-results")).not.toBeNull();
  });

  it("wires the related button to the explore callback", () => {
    const onExplore = vi.fn();
    renderSearchPage(container, stateWith({ lastResponse: searchResponse([resultItem({ id: 7 })]) }), onExplore);
    container.querySelector<HTMLButtonElement>(".related-button")!.click();
    expect(onExplore).toHaveBeenCalledWith(7);
  });
});

describe("renderRelatedPanel", () => {
  it("renders k rows with similarity values", () => {
    const related = [1, 2, 3, 4, 5].map((i) => ({
      id: i + 10,
      similarity: 1 / i,
      title: `Story ${i}`,
      label: "nature",
    }));
    renderRelatedPanel(container, { id: 3, related }, () => {});
    const rows = [...container.querySelectorAll(".related-row")];
    expect(rows).toHaveLength(5);
    expect(container.querySelectorAll(".related-similarity")[0]!.textContent).toBe("1.0000");
  });

  it("says so when there are no related articles", () => {
    renderRelatedPanel(container, { id: 3, related: [] }, () => {});
    expect(container.querySelector(".related-empty")!.textContent).toBe("no related articles");
  });

  it("shows no data on missing documents", () => {
    renderRelatedPanel(container, "no-data", () => {});
    expect(container.querySelector(".related-empty")!.textContent).toBe("no data");
  });

  it("clicking a related row re-centers on that id", () => {
    const onRecenter = vi.fn();
    renderRelatedPanel(
      container,
      { id: 3, related: [{ id: 42, similarity: 0.5, title: "Other", label: null }] },
      onRecenter
    );
    container.querySelector<HTMLAnchorElement>(".related-title")!.click();
    expect(onRecenter).toHaveBeenCalledWith(42);
  });
});

describe("renderCategoryOptions", () => {
  it("prepends the All option", () => {
    document.body.innerHTML = "<select id='s'></select>";
    const select = document.getElementById("s") as HTMLSelectElement;
    renderCategoryOptions(select, ["business", "nature"], "All");
    expect([...select.options].map((o) => o.value)).toEqual(["All", "business", "nature"]);
  });
});
