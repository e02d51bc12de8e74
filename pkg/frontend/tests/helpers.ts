/**
 * Shared test plumbing: a recording fetch stub and small DOM utilities.
 */

import type { FetchLike } from "../src/api.js";

export interface RecordedRequest {
  url: string;
  method: string;
  body: string | null;
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

/**
 * A fetch stand-in that records every request verbatim and answers from the
 * given handler. Request bodies are kept as the exact strings sent.
 */
export class FetchRecorder {
  readonly requests: RecordedRequest[] = [];
  private readonly handler: (request: RecordedRequest) => Response;

  constructor(handler: (request: RecordedRequest) => Response) {
    this.handler = handler;
  }

  get fetch(): FetchLike {
    return async (url, init) => {
      const request: RecordedRequest = {
        url,
        method: init?.method ?? "GET",
        body: typeof init?.body === "string" ? init.body : null,
      };
      this.requests.push(request);
      return this.handler(request);
    };
  }

  get last(): RecordedRequest {
    if (this.requests.length === 0) {
      throw new Error("no requests recorded");
    }
    return this.requests[this.requests.length - 1];
  }
}

/** Wait for queued microtasks and zero-delay timers to run. */
export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

export function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}
