// Thin DOM layer: build elements from view-models, wire button handlers.

import type { ChecklistItem, GraphView, BannerView } from "./view.js";
import type { QueryCard } from "./flow.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = []
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function renderCard(
  card: QueryCard,
  onAnswer: (queryId: number, answer: "yes" | "no") => void
): HTMLElement {
  const yes = el("button", { class: "yes" }, ["yes"]);
  const no = el("button", { class: "no" }, ["no"]);
  yes.addEventListener("click", () => onAnswer(card.queryId, "yes"));
  no.addEventListener("click", () => onAnswer(card.queryId, "no"));
  return el("div", { class: "card", "data-query-id": String(card.queryId) }, [
    el("p", { class: "question" }, [card.question]),
    el("p", { class: "identifiers" }, [`${card.kind}: (${card.pair.join(", ")})`]),
    yes,
    no,
  ]);
}

export function renderBanner(banner: BannerView): HTMLElement {
  return el("div", { class: `banner ${banner.tone}` }, [banner.text]);
}

export function renderChecklist(items: ChecklistItem[]): HTMLElement {
  const marks = { confirmed: "✓", violated: "✗", unresolved: "?" };
  return el(
    "ul",
    { class: "obligations" },
    items.map((item) =>
      el("li", { class: item.status }, [`${marks[item.status]} ${item.label}`])
    )
  );
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderGraph(view: GraphView): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${view.width} ${view.height}`);
  svg.setAttribute("class", "graph");
  const byId = new Map(view.nodes.map((n) => [n.id, n]));
  for (const edge of view.edges) {
    const from = byId.get(edge.from);
    const to = byId.get(edge.to);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(from.x));
    line.setAttribute("y1", String(from.y));
    line.setAttribute("x2", String(to.x));
    line.setAttribute("y2", String(to.y));
    line.setAttribute("class", `edge ${edge.kind}`);
    svg.append(line);
  }
  for (const node of view.nodes) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", node.kind === "argument" ? "14" : "18");
    circle.setAttribute("class", `node ${node.kind}`);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(node.x));
    label.setAttribute("y", String(node.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.id;
    svg.append(circle, label);
  }
  return svg;
}
