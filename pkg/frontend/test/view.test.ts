import { describe, expect, it } from "vitest";

import { graphView, obligationChecklist, questionText, verdictBanner } from "../src/view.js";
import type { InstanceDoc, ModelDoc, ReportResponse, TranscriptDoc } from "../src/types.js";

const instance: InstanceDoc = {
  format: "dj-situation/1",
  propositions: ["t"],
  arguments: ["s", "s1", "s2", "s3"],
  support: [
    ["s", "t"],
    ["s1", "t"],
  ],
  relations: { mode: "perspectives", perspectives: { p1: [["s2", "s1"]] } },
};

const model: ModelDoc = {
  format: "dj-model/1",
  support: [["s", "t"]],
  counters: [["s3", "s2"]],
};

describe("question phrasing", () => {
  it("keeps identifiers visible", () => {
    expect(questionText("support", ["s", "t"])).toBe("Does s support proposition t?");
    expect(questionText("trump", ["s2", "s1"])).toBe(
      "Does argument s2 defeat argument s1?"
    );
  });
});

describe("graph view", () => {
  it("lays out every node and edge", () => {
    const view = graphView(instance, model);
    expect(view.nodes.map((n) => n.id).sort()).toEqual(["s", "s1", "s2", "s3", "t"]);
    expect(view.edges).toContainEqual({ from: "s", to: "t", kind: "support" });
    expect(view.edges).toContainEqual({ from: "s3", to: "s2", kind: "counter" });
    for (const node of view.nodes) {
      expect(node.x).toBeGreaterThanOrEqual(0);
      expect(node.x).toBeLessThanOrEqual(view.width);
      expect(node.y).toBeGreaterThanOrEqual(0);
      expect(node.y).toBeLessThanOrEqual(view.height);
    }
  });
});

describe("obligation checklist", () => {
  const transcript: TranscriptDoc = {
    format: "dj-transcript/1",
    model,
    gamma: ["s", "s1", "s2", "s3"],
    budget: 1,
    single_round: true,
    queries: [],
    verdict: {
      verdict: "invalid",
      failures: [{ kind: "uncountered-trumper", subject: ["s", "s2"] }],
      unresolved: [],
      retry_rounds: [{ obligation: ["claim-counter", "s", "t", "s1"], rounds: 1 }],
    },
  };

  it("marks confirmed and violated obligations", () => {
    const items = obligationChecklist(transcript);
    const statuses = Object.fromEntries(items.map((i) => [i.label, i.status]));
    expect(statuses["claimed support: s supports t"]).toBe("confirmed");
    expect(statuses["counter the attack of s1 on s"]).toBe("confirmed");
    expect(statuses["counter the attack of s2 on s"]).toBe("violated");
  });
});

describe("banner", () => {
  it("reports running sessions", () => {
    const report: ReportResponse = {
      state: "running",
      transcript: null,
      verdict: null,
      claims: null,
      judgment_conclusion: null,
    };
    expect(verdictBanner(report).tone).toBe("running");
  });

  it("falls back to claims without a certificate", () => {
    const report: ReportResponse = {
      state: "done",
      transcript: null,
      verdict: "valid",
      claims: ["t"],
      judgment_conclusion: null,
    };
    expect(verdictBanner(report).text).toContain("T_eta = {t}");
  });
});
