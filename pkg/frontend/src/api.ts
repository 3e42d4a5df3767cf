import type { SessionDoc, SessionState } from "./model.js";

/** Error from the service, carrying the HTTP status it answered with. */
export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

/**
 * The slice of the service the explorer uses.  Tests substitute a fixture
 * implementation; production uses HttpApi below.
 */
export interface ApiClient {
  createSession(body: unknown): Promise<SessionDoc>;
  getState(id: string): Promise<SessionState>;
  mutate(id: string, vertex: number): Promise<SessionState>;
  undo(id: string): Promise<SessionState>;
}

async function request<T>(
  url: string,
  method: string,
  body?: unknown,
): Promise<T> {
  const init: RequestInit = { method };
  if (body !== undefined) {
    init.body = JSON.stringify(body);
    init.headers = { "Content-Type": "application/json" };
  }
  const res = await fetch(url, init);
  const text = await res.text();
  if (!res.ok) {
    let message = text;
    try {
      const doc = JSON.parse(text) as { error?: string };
      if (typeof doc.error === "string") {
        message = doc.error;
      }
    } catch {
      // non-JSON error body, keep the raw text
    }
    throw new ServiceError(res.status, message);
  }
  return JSON.parse(text) as T;
}

export class HttpApi implements ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  createSession(body: unknown): Promise<SessionDoc> {
    return request(`${this.baseUrl}/api/session`, "POST", body);
  }

  getState(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/api/session/${id}`, "GET");
  }

  mutate(id: string, vertex: number): Promise<SessionState> {
    return request(`${this.baseUrl}/api/session/${id}/mutate`, "POST", {
      vertex,
    });
  }

  undo(id: string): Promise<SessionState> {
    return request(`${this.baseUrl}/api/session/${id}/undo`, "POST");
  }
}
