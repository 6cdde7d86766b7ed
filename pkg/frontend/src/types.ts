// DTOs mirroring the session service's JSON bodies.

export type Pair = [string, string];

export interface InstanceDoc {
  format: string;
  propositions: string[];
  arguments: string[];
  support: Pair[];
  relations:
    | { mode: "perspectives"; perspectives: Record<string, Pair[]> }
    | { mode: "direct"; trumps_exists: Pair[]; ambivalent: Pair[] };
}

export interface ModelDoc {
  format: string;
  support: Pair[];
  counters: Pair[];
}

export interface PendingQuery {
  query_id: number;
  kind: "trump" | "support";
  pair: Pair;
}

export interface CreateSessionResponse {
  session_id: string;
  state: "running" | "done";
}

export interface NextResponse {
  state: "running" | "done";
  query: PendingQuery | null;
  verdict: string | null;
}

export interface AnswerResponse {
  acknowledged: boolean;
  state: "running" | "done";
  verdict: string | null;
}

export interface TranscriptQuery {
  kind: "trump" | "support";
  pair: Pair;
  answer: "yes" | "no";
  perspective: string | null;
}

export interface TranscriptDoc {
  format: string;
  model: ModelDoc;
  gamma: string[];
  budget: number;
  single_round: boolean;
  queries: TranscriptQuery[];
  verdict: {
    verdict: "valid" | "invalid" | "inconclusive";
    failures: { kind: string; subject: Pair }[];
    unresolved: string[][];
    retry_rounds: { obligation: string[]; rounds: number }[];
  };
}

export interface JudgmentConclusion {
  holds: boolean;
  T_i: string[];
  basis: string;
  certificate_j: number;
  certificate_k: number;
}

export interface ReportResponse {
  state: "running" | "done";
  transcript: TranscriptDoc | { queries: TranscriptQuery[] } | null;
  verdict: string | null;
  claims: string[] | null;
  judgment_conclusion: JudgmentConclusion | null;
}

export interface CreateSessionRequest {
  instance: InstanceDoc;
  model: ModelDoc;
  gamma?: string[] | null;
  oracle_mode: { mode: "human" | "simulated"; policy?: string; seed?: number };
  budget?: number;
  cac_certificate?: Record<string, unknown> | null;
}
