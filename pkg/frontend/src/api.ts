// Typed client for the session service.  The fetch implementation is
// injectable so tests can replay recorded exchanges.

import type {
  AnswerResponse,
  CreateSessionRequest,
  CreateSessionResponse,
  InstanceDoc,
  NextResponse,
  ReportResponse,
} from "./types.js";

export interface HttpResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<HttpResponse>;

export class ServiceError extends Error {
  constructor(public status: number, public body: unknown) {
    super(`service error ${status}: ${JSON.stringify(body)}`);
  }
}

export class SessionApi {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (url, init) => fetch(url, init)
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: Parameters<FetchLike>[1] = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ServiceError(response.status, payload);
    }
    return payload as T;
  }

  async listInstances(): Promise<string[]> {
    const body = await this.request<{ instances: string[] }>("GET", "/instances");
    return body.instances;
  }

  getInstance(name: string): Promise<InstanceDoc> {
    return this.request("GET", `/instances/${name}`);
  }

  createSession(request: CreateSessionRequest): Promise<CreateSessionResponse> {
    return this.request("POST", "/sessions", request);
  }

  nextQuery(sessionId: string): Promise<NextResponse> {
    return this.request("GET", `/sessions/${sessionId}/next`);
  }

  postAnswer(
    sessionId: string,
    queryId: number,
    answer: "yes" | "no"
  ): Promise<AnswerResponse> {
    return this.request("POST", `/sessions/${sessionId}/answer`, {
      query_id: queryId,
      answer,
    });
  }

  report(sessionId: string): Promise<ReportResponse> {
    return this.request("GET", `/sessions/${sessionId}/report`);
  }
}
