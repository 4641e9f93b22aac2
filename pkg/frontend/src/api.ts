// Thin typed client for the search service. fetch is injectable so tests
// run against a scripted fake service.

import type {
  ApiErrorBody,
  CategoriesResponse,
  RelatedResponse,
  SearchResponse,
} from "./types";

export type FetchLike = (url: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  try {
    const body = (await response.json()) as ApiErrorBody;
    return new ApiError(body.error.code, body.error.message, response.status);
  } catch {
    return new ApiError("http_error", `HTTP ${response.status}`, response.status);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url) => fetch(url)
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path);
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  search(params: {
    q: string;
    category?: string;
    limit?: number;
  }): Promise<SearchResponse> {
    const query = new URLSearchParams({ q: params.q });
    if (params.category !== undefined) query.set("category", params.category);
    if (params.limit !== undefined) query.set("limit", String(params.limit));
    return this.getJson<SearchResponse>(`/search?${query.toString()}`);
  }

  categories(): Promise<CategoriesResponse> {
    return this.getJson<CategoriesResponse>("/categories");
  }

  related(docId: number, k = 5): Promise<RelatedResponse> {
    return this.getJson<RelatedResponse>(`/related/${docId}?k=${k}`);
  }
}
