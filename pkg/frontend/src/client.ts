/** Thin fetch wrapper: typed JSON gets, API error mapping, and staleness
 * detection via the corpus id reported by /meta. */

import type { ApiErrorBody, Meta } from "./types.js";

export class ApiError extends Error {
  readonly body: ApiErrorBody;

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.body = body;
  }
}

export interface ResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string) => Promise<ResponseLike>;

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;
  private corpusId: string | null = null;

  constructor(baseUrl = "", fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchImpl =
      fetchImpl ?? ((url) => globalThis.fetch(url) as Promise<ResponseLike>);
  }

  async getJson<T>(path: string): Promise<T> {
    let response: ResponseLike;
    try {
      response = await this.fetchImpl(this.baseUrl + path);
    } catch (err) {
      throw new ApiError({
        status: 0,
        code: "network_error",
        message: String(err),
      });
    }
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // fall through to the status check with an empty body
    }
    if (!response.ok) {
      const errBody = body as Partial<ApiErrorBody> | null;
      throw new ApiError({
        status: errBody?.status ?? response.status,
        code: errBody?.code ?? "http_error",
        message: errBody?.message ?? `HTTP ${response.status}`,
      });
    }
    return body as T;
  }

  /** Fetch /meta and report whether the corpus changed since last seen. */
  async fetchMeta(): Promise<{ meta: Meta; stale: boolean }> {
    const meta = await this.getJson<Meta>("/api/v1/meta");
    const stale = this.corpusId !== null && this.corpusId !== meta.corpus_id;
    if (this.corpusId === null) this.corpusId = meta.corpus_id;
    return { meta, stale };
  }

  /** Accept the latest corpus id (after the operator reloads the page data). */
  acknowledgeCorpus(meta: Meta): void {
    this.corpusId = meta.corpus_id;
  }
}

/** API base resolution: ?api_base= wins, then the injected global, then
 * same-origin. Covers both runtime and build-time configuration. */
export function resolveApiBase(
  search: string,
  injected: string | undefined,
): string {
  const fromQuery = new URLSearchParams(search).get("api_base");
  return fromQuery ?? injected ?? "";
}
