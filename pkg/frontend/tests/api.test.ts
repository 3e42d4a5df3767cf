import { afterEach, describe, expect, it, vi } from "vitest";

import { HttpApi, ServiceError } from "../src/api.js";
import type { SessionState } from "../src/model.js";
import { Explorer } from "../src/main.js";
import { FixtureApi, loadFixture } from "./fixtureApi.js";

type Call = { url: string; init?: RequestInit };

function stubFetch(status: number, body: string): Call[] {
  const calls: Call[] = [];
  vi.stubGlobal("fetch", async (url: unknown, init?: RequestInit) => {
    calls.push({ url: String(url), init });
    return {
      ok: status >= 200 && status < 300,
      status,
      text: async () => body,
    };
  });
  return calls;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("http client", () => {
  it("posts mutations to the session endpoint", async () => {
    const stateBody =
      '{"history":[0],"quiver":{"b":[[0]],"frozen":[],"w":[0]},"step":1,"vars":null}';
    const calls = stubFetch(200, stateBody);
    const api = new HttpApi("http://127.0.0.1:8787");
    const state = await api.mutate("abc123", 2);
    expect(calls).toHaveLength(1);
    expect(calls[0]!.url).toBe(
      "http://127.0.0.1:8787/api/session/abc123/mutate",
    );
    expect(calls[0]!.init?.method).toBe("POST");
    expect(calls[0]!.init?.body).toBe('{"vertex":2}');
    expect(state.step).toBe(1);
  });

  it("turns error documents into typed errors", async () => {
    stubFetch(409, '{"error":"vertex 1 is frozen"}');
    const api = new HttpApi("");
    const err = await api.undo("abc").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).status).toBe(409);
    expect((err as ServiceError).message).toBe("vertex 1 is frozen");
  });
});

class FailingMutateApi extends FixtureApi {
  failure: unknown = new TypeError("fetch failed");

  override async mutate(): Promise<SessionState> {
    this.mutateCalls += 1;
    throw this.failure;
  }
}

describe("failure banners", () => {
  it("shows unreachable and keeps the last good state", async () => {
    const api = new FailingMutateApi(loadFixture("pentagon"));
    const root = document.createElement("div");
    const explorer = await Explorer.create(root, api, {
      b: [[0, 1], [-1, 0]],
      w: [0, 0],
    });
    await explorer.clickVertex(0);
    expect(root.querySelector(".banner")?.textContent).toBe(
      "service unreachable",
    );
    expect(explorer.state.step).toBe(0);
    expect(root.querySelectorAll("ul.variables li")).toHaveLength(2);
  });

  it("shows the service's own message on a status error", async () => {
    const api = new FailingMutateApi(loadFixture("pentagon"));
    api.failure = new ServiceError(409, "vertex 0 is frozen");
    const root = document.createElement("div");
    const explorer = await Explorer.create(root, api, {
      b: [[0, 1], [-1, 0]],
      w: [0, 0],
    });
    await explorer.clickVertex(0);
    expect(root.querySelector(".banner")?.textContent).toBe(
      "service error 409: vertex 0 is frozen",
    );
  });
});
