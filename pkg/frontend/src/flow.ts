// Session flow driver: present one query, post one answer, repeat.
// Answers are observations; there is no undo and no local inference.

import type { SessionApi } from "./api.js";
import type { PendingQuery, ReportResponse } from "./types.js";
import { questionText } from "./view.js";

export interface QueryCard {
  queryId: number;
  kind: "trump" | "support";
  pair: [string, string];
  question: string;
}

export type FlowState =
  | { state: "running"; card: QueryCard }
  | { state: "done"; verdict: string };

export class SessionFlow {
  readonly asked: { query: PendingQuery; answer?: "yes" | "no" }[] = [];

  constructor(private api: SessionApi, readonly sessionId: string) {}

  async current(): Promise<FlowState> {
    const next = await this.api.nextQuery(this.sessionId);
    if (next.state === "done") {
      return { state: "done", verdict: next.verdict ?? "unknown" };
    }
    const query = next.query!;
    const last = this.asked[this.asked.length - 1];
    if (!last || last.query.query_id !== query.query_id) {
      this.asked.push({ query });
    }
    return {
      state: "running",
      card: {
        queryId: query.query_id,
        kind: query.kind,
        pair: query.pair,
        question: questionText(query.kind, query.pair),
      },
    };
  }

  async answer(queryId: number, answer: "yes" | "no"): Promise<void> {
    await this.api.postAnswer(this.sessionId, queryId, answer);
    const entry = this.asked.find((e) => e.query.query_id === queryId);
    if (entry) {
      entry.answer = answer;
    }
  }

  report(): Promise<ReportResponse> {
    return this.api.report(this.sessionId);
  }
}
