import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, ApiError, resolveApiBase } from "../src/client.js";
import type { Meta } from "../src/types.js";
import { FIXTURES, makeFakeFetch, type FakeFetch } from "./fake_fetch.js";

let fake: FakeFetch;

beforeEach(() => {
  fake = makeFakeFetch();
});

describe("ApiClient", () => {
  it("prefixes the base URL", async () => {
    const client = new ApiClient("http://api.example:8000/", fake.fetch);
    await client.getJson("/api/v1/meta").catch(() => undefined);
    expect(fake.requests[0]).toBe("http://api.example:8000/api/v1/meta");
  });

  it("maps error bodies to ApiError", async () => {
    fake.stub("/api/v1/topics?week=x", 400, {
      status: 400, code: "bad_parameter", message: "week is required",
    });
    const client = new ApiClient("", fake.fetch);
    const err = await client.getJson("/api/v1/topics?week=x")
      .then(() => null, (e) => e as ApiError);
    expect(err).toBeInstanceOf(ApiError);
    expect(err!.body).toEqual({
      status: 400, code: "bad_parameter", message: "week is required",
    });
  });

  it("flags staleness when the corpus id changes", async () => {
    const client = new ApiClient("", fake.fetch);
    const first = await client.fetchMeta();
    expect(first.stale).toBe(false);

    const meta = FIXTURES["/api/v1/meta"] as Meta;
    fake.stub("/api/v1/meta", 200, { ...meta, corpus_id: "different" });
    const second = await client.fetchMeta();
    expect(second.stale).toBe(true);

    client.acknowledgeCorpus(second.meta);
    expect((await client.fetchMeta()).stale).toBe(false);
  });
});

describe("resolveApiBase", () => {
  it("query parameter wins, then the injected global, then same-origin", () => {
    expect(resolveApiBase("?api_base=http://x:1", "http://y:2"))
      .toBe("http://x:1");
    expect(resolveApiBase("", "http://y:2")).toBe("http://y:2");
    expect(resolveApiBase("", undefined)).toBe("");
  });
});
