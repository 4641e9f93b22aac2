import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("builds search urls with encoded params", async () => {
    const urls: string[] = [];
    const client = new ApiClient("http://svc", async (url) => {
      urls.push(url);
      return jsonResponse({ results: [], total_candidates: 0 });
    });
    await client.search({ q: "covid rules", category: "UK Politics", limit: 5 });
    expect(urls[0]).toBe(
      "http://svc/search?q=covid+rules&category=UK+Politics&limit=5"
    );
  });

  it("omits absent params", async () => {
    const urls: string[] = [];
    const client = new ApiClient("", async (url) => {
      urls.push(url);
      return jsonResponse({ results: [], total_candidates: 0 });
    });
    await client.search({ q: "jaguar" });
    expect(urls[0]).toBe("/search?q=jaguar");
  });

  it("raises ApiError with the service error code", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse({ error: { code: "empty_query", message: "no terms" } }, 400)
    );
    await expect(client.search({ q: "" })).rejects.toMatchObject({
      code: "empty_query",
      status: 400,
    });
  });

  it("degrades to http_error on unparseable bodies", async () => {
    const client = new ApiClient("", async () => new Response("boom", { status: 500 }));
    const err = await client.search({ q: "x" }).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("http_error");
  });

  it("fetches categories and related", async () => {
    const urls: string[] = [];
    const client = new ApiClient("", async (url) => {
      urls.push(url);
      if (url.startsWith("/categories")) {
        return jsonResponse({ categories: ["nature"] });
      }
      return jsonResponse({ id: 3, related: [] });
    });
    expect((await client.categories()).categories).toEqual(["nature"]);
    expect((await client.related(3)).id).toBe(3);
    expect(urls).toEqual(["/categories", "/related/3?k=5"]);
  });
});
