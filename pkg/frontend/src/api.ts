/**
 * Thin fetch wrappers over the claimcheck HTTP API. Responses are parsed
 * through the zod schemas so anything malformed fails loudly here rather
 * than deep inside rendering. The fetch function is injectable for tests.
 */

import {
  FeedbackResponseSchema,
  SessionSchema,
  VerdictSchema,
  type FeedbackRequest,
  type FeedbackResponse,
  type Session,
  type Verdict,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`api error ${status}: ${detail}`);
  }
}

async function detailOf(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") {
      return body.detail;
    }
    return JSON.stringify(body.detail ?? body);
  } catch {
    return response.statusText || `status ${response.status}`;
  }
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post(path: string, body: unknown): Promise<Response> {
    return this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async checkClaim(claim: string, k?: number): Promise<Session> {
    const response = await this.post("/claims", k === undefined ? { claim } : { claim, k });
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return SessionSchema.parse(await response.json());
  }

  async getSession(sessionId: string): Promise<Session> {
    const response = await this.fetchFn(`${this.base}/sessions/${sessionId}`);
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return SessionSchema.parse(await response.json());
  }

  /** Advance to the next window; 409 means the document is exhausted. */
  async showMore(
    verdictId: string,
  ): Promise<{ kind: "verdict"; verdict: Verdict } | { kind: "end" }> {
    const response = await this.fetchFn(`${this.base}/verdicts/${verdictId}/more`, {
      method: "POST",
    });
    if (response.status === 409) {
      return { kind: "end" };
    }
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return { kind: "verdict", verdict: VerdictSchema.parse(await response.json()) };
  }

  /** Submit feedback; 422 comes back as an inline-able validation message. */
  async submitFeedback(
    verdictId: string,
    body: FeedbackRequest,
  ): Promise<
    { kind: "ok"; response: FeedbackResponse } | { kind: "invalid"; message: string }
  > {
    const response = await this.post(`/verdicts/${verdictId}/feedback`, body);
    if (response.status === 422) {
      return { kind: "invalid", message: await detailOf(response) };
    }
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return { kind: "ok", response: FeedbackResponseSchema.parse(await response.json()) };
  }
}
