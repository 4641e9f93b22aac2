// Payload shapes of the search service JSON API. The UI renders these
// verbatim: no client-side re-ranking, filtering, or recomputation.

export interface SentimentPayload {
  positive: number;
  negative: number;
  neutral: number;
  polarity: number;
  class: "positive" | "neutral" | "negative";
}

export interface SearchResultItem {
  id: number;
  title: string;
  url: string;
  label: string;
  dt: string;
  score: number;
  sentiment: SentimentPayload;
  matched_terms: string[];
  fuzzy_substitutions: Record<string, string>;
}

export interface SearchResponse {
  results: SearchResultItem[];
  total_candidates: number;
  category_unknown?: boolean;
}

export interface RelatedEntry {
  id: number;
  similarity: number;
  title: string | null;
  label: string | null;
}

export interface RelatedResponse {
  id: number;
  related: RelatedEntry[];
}

export interface CategoriesResponse {
  categories: string[];
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}

export const ALL_CATEGORIES = "All";

export interface UiQueryState {
  text: string;
  category: string; // a label from /categories, or ALL_CATEGORIES
  limit: number;
  lastResponse: SearchResponse | null;
  error: { code: string; message: string } | null;
  validation: string | null; // inline message for empty submissions
  loading: boolean;
}

export function initialState(): UiQueryState {
  return {
    text: "",
    category: ALL_CATEGORIES,
    limit: 10,
    lastResponse: null,
    error: null,
    validation: null,
    loading: false,
  };
}
