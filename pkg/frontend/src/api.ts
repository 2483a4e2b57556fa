/** Typed client for the embedding service; all vector math stays server-side. */

import type {
  AnalogyResult,
  CompareResult,
  ErrorBody,
  Info,
  MapResult,
  Neighbors,
  Similarity,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly word?: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let body: ErrorBody = { error: `HTTP ${response.status}` };
    try {
      body = (await response.json()) as ErrorBody;
    } catch {
      // non-JSON error body; keep the status fallback
    }
    throw new ApiError(response.status, body.error, body.word);
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(private readonly base: string = "") {}

  private url(path: string, params?: Record<string, string | number>): string {
    const query = params
      ? "?" +
        Object.entries(params)
          .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(v)}`)
          .join("&")
      : "";
    return `${this.base}${path}${query}`;
  }

  info(): Promise<Info> {
    return fetch(this.url("/api/info")).then((r) => asJson<Info>(r));
  }

  similarity(w1: string, w2: string): Promise<Similarity> {
    return fetch(this.url("/api/similarity", { w1, w2 })).then((r) =>
      asJson<Similarity>(r),
    );
  }

  mostSimilar(w: string, k = 10): Promise<Neighbors> {
    return fetch(this.url("/api/most_similar", { w, k })).then((r) =>
      asJson<Neighbors>(r),
    );
  }

  analogy(a: string, b: string, c: string, k = 10): Promise<AnalogyResult> {
    return fetch(this.url("/api/analogy", { a, b, c, k })).then((r) =>
      asJson<AnalogyResult>(r),
    );
  }

  compare(group1: string[], group2: string[]): Promise<CompareResult> {
    return fetch(this.url("/api/compare"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ group1, group2 }),
    }).then((r) => asJson<CompareResult>(r));
  }

  map(n: number, k: number): Promise<MapResult> {
    return fetch(this.url("/api/map", { n, k })).then((r) =>
      asJson<MapResult>(r),
    );
  }
}
