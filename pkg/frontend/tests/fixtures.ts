import type { SearchResponse, SearchResultItem } from "../src/types";

export function resultItem(overrides: Partial<SearchResultItem> = {}): SearchResultItem {
  return {
    id: 1,
    title: "Jaguar sighting in rainforest",
    url: "http://example.org/1",
    label: "nature",
    dt: "2021-03-10",
    score: 1.2345,
    sentiment: {
      positive: 3,
      negative: -1,
      neutral: 0,
      polarity: 0.6666666666666666,
      class: "positive",
    },
    matched_terms: ["jaguar"],
    fuzzy_substitutions: {},
    ...overrides,
  };
}

export function searchResponse(
  items: SearchResultItem[],
  overrides: Partial<SearchResponse> = {}
): SearchResponse {
  return { results: items, total_candidates: items.length, ...overrides };
}

export function threeResults(): SearchResponse {
  return searchResponse([
    resultItem({ id: 5, title: "First story", sentiment: { positive: 4, negative: -1, neutral: 0, polarity: 1.0, class: "positive" } }),
    resultItem({ id: 2, title: "Second story", sentiment: { positive: 1, negative: -1, neutral: 0, polarity: 0.0, class: "neutral" } }),
    resultItem({ id: 9, title: "Third story", sentiment: { positive: 1, negative: -4, neutral: 0, polarity: -1.0, class: "negative" } }),
  ]);
}
