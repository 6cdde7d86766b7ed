// Pure view-model builders.  Everything shown comes verbatim from service
// responses; these helpers only phrase and arrange it.

import type {
  InstanceDoc,
  ModelDoc,
  Pair,
  ReportResponse,
  TranscriptDoc,
} from "./types.js";

export function questionText(kind: "trump" | "support", pair: Pair): string {
  const [a, b] = pair;
  if (kind === "support") {
    return `Does ${a} support proposition ${b}?`;
  }
  return `Does argument ${a} defeat argument ${b}?`;
}

export interface BannerView {
  tone: "valid" | "invalid" | "inconclusive" | "running";
  text: string;
}

function setText(values: string[]): string {
  return `{${values.join(", ")}}`;
}

export function verdictBanner(report: ReportResponse): BannerView {
  if (report.state !== "done" || report.verdict === null) {
    return { tone: "running", text: "session running" };
  }
  if (report.verdict === "valid") {
    const conclusion = report.judgment_conclusion;
    if (conclusion && conclusion.holds) {
      return {
        tone: "valid",
        text: `model valid, T_i = ${setText(conclusion.T_i)}`,
      };
    }
    return {
      tone: "valid",
      text: `model valid; claims T_eta = ${setText(report.claims ?? [])}`,
    };
  }
  const transcript = report.transcript as TranscriptDoc | null;
  const failures = transcript?.verdict.failures ?? [];
  const explanations = failures.map((f) => {
    const [x, y] = f.subject;
    switch (f.kind) {
      case "unsupported-claim":
        return `${x} does not support ${y}`;
      case "uncountered-trumper":
        return `${x} is defeated by ${y}, and the model offers no confirmed counter to ${y}`;
      default:
        return `proposition ${x} needs a counter to its supporter ${y}`;
    }
  });
  if (report.verdict === "invalid") {
    return { tone: "invalid", text: `model invalid: ${explanations.join("; ")}` };
  }
  return {
    tone: "inconclusive",
    text: "inconclusive: some obligations could not be confirmed within the retry budget",
  };
}

export interface ChecklistItem {
  label: string;
  status: "confirmed" | "violated" | "unresolved";
}

export function obligationChecklist(transcript: TranscriptDoc): ChecklistItem[] {
  const items: ChecklistItem[] = [];
  const failed = new Set(
    transcript.verdict.failures.map((f) => `${f.kind}:${f.subject.join(",")}`)
  );
  for (const [s, t] of transcript.model.support) {
    const violated = failed.has(`unsupported-claim:${s},${t}`);
    items.push({
      label: `claimed support: ${s} supports ${t}`,
      status: violated ? "violated" : "confirmed",
    });
  }
  const unresolvedKeys = new Set(
    transcript.verdict.unresolved.map((o) => o.join("|"))
  );
  for (const { obligation } of transcript.verdict.retry_rounds) {
    const key = obligation.join("|");
    const kind = obligation[0];
    const label =
      kind === "claim-counter"
        ? `counter the attack of ${obligation[3]} on ${obligation[1]}`
        : `counter ${obligation[2]}, a supporter of unclaimed ${obligation[1]}`;
    items.push({
      label,
      status: unresolvedKeys.has(key) ? "unresolved" : "confirmed",
    });
  }
  for (const f of transcript.verdict.failures) {
    if (f.kind === "uncountered-trumper") {
      items.push({
        label: `counter the attack of ${f.subject[1]} on ${f.subject[0]}`,
        status: "violated",
      });
    } else if (f.kind === "missing-counter-for-supporter") {
      items.push({
        label: `counter ${f.subject[1]}, a supporter of unclaimed ${f.subject[0]}`,
        status: "violated",
      });
    }
  }
  return items;
}

export interface GraphNode {
  id: string;
  kind: "argument" | "proposition";
  x: number;
  y: number;
}

export interface GraphEdge {
  from: string;
  to: string;
  kind: "support" | "counter";
}

export interface GraphView {
  nodes: GraphNode[];
  edges: GraphEdge[];
  width: number;
  height: number;
}

// circle of arguments around a column of propositions; no layout research,
// just something stable and readable at desk scale
export function graphView(instance: InstanceDoc, model: ModelDoc): GraphView {
  const width = 480;
  const height = 360;
  const nodes: GraphNode[] = [];
  const args = [...instance.arguments].sort();
  const props = [...instance.propositions].sort();
  const cx = width * 0.42;
  const cy = height / 2;
  const radius = Math.min(cx, cy) - 40;
  args.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / Math.max(args.length, 1) - Math.PI / 2;
    nodes.push({
      id,
      kind: "argument",
      x: Math.round(cx + radius * Math.cos(angle)),
      y: Math.round(cy + radius * Math.sin(angle)),
    });
  });
  props.forEach((id, i) => {
    nodes.push({
      id,
      kind: "proposition",
      x: width - 60,
      y: Math.round(((i + 1) * height) / (props.length + 1)),
    });
  });
  const edges: GraphEdge[] = [
    ...instance.support.map(([from, to]): GraphEdge => ({ from, to, kind: "support" })),
    ...model.counters.map(([from, to]): GraphEdge => ({ from, to, kind: "counter" })),
  ];
  return { nodes, edges, width, height };
}
