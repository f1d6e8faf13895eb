/** Typed client for the anysort session API. All ranking logic lives on the
 * server; this module only moves JSON. */

export type SessionStatus = "active" | "interrupted" | "completed";

export interface PendingPair {
  pair: [number, number];
  labels: [string, string];
}

export interface SessionView {
  id: string;
  labels: string[];
  algorithm: string;
  status: SessionStatus;
  comparisons_done: number;
  pending: PendingPair | null;
  estimate: string[];
  estimate_indices: number[];
}

export interface EstimateView {
  estimate: string[];
  estimate_indices: number[];
  comparisons_done: number;
  status: SessionStatus;
}

export interface SessionExport {
  id: string;
  labels: string[];
  algorithm: string;
  status: SessionStatus;
  history: [number, number][];
  estimate: string[];
}

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const parsed = (await response.json()) as { detail?: unknown };
        if (parsed.detail !== undefined) detail = String(parsed.detail);
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(labels: string[], algorithm = "corsort"): Promise<SessionView> {
    return this.request("POST", "/sessions", { labels, algorithm });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  answer(
    id: string,
    pair: [number, number],
    lesser: number,
  ): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/answer`, { pair, lesser });
  }

  interrupt(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/interrupt`);
  }

  estimate(id: string): Promise<EstimateView> {
    return this.request("GET", `/sessions/${id}/estimate`);
  }

  exportSession(id: string): Promise<SessionExport> {
    return this.request("GET", `/sessions/${id}/export`);
  }

  exportUrl(id: string): string {
    return `${this.baseUrl}/sessions/${id}/export`;
  }
}
