// App wiring: fixture gallery, session setup, answer flow, final report.

import { SessionApi } from "./api.js";
import { SessionFlow } from "./flow.js";
import { el, renderBanner, renderCard, renderChecklist, renderGraph } from "./dom.js";
import { graphView, obligationChecklist, verdictBanner } from "./view.js";
import type { InstanceDoc, ModelDoc, TranscriptDoc } from "./types.js";

const api = new SessionApi(
  (window as { DJ_SERVICE_URL?: string }).DJ_SERVICE_URL ?? "http://127.0.0.1:8000"
);

const root = document.getElementById("app")!;

async function showGallery(): Promise<void> {
  root.replaceChildren(el("p", {}, ["loading instances..."]));
  const names = await api.listInstances();
  const list = el(
    "ul",
    { class: "gallery" },
    names.map((name) => {
      const button = el("button", {}, [name]);
      button.addEventListener("click", () => void setupSession(name));
      return el("li", {}, [button]);
    })
  );
  root.replaceChildren(el("h2", {}, ["pick an instance"]), list);
}

async function setupSession(name: string): Promise<void> {
  const instance = await api.getInstance(name);
  const modelBox = el("textarea", { rows: "10", cols: "60" }) as HTMLTextAreaElement;
  modelBox.value = JSON.stringify(
    { format: "dj-model/1", support: instance.support.slice(0, 1), counters: [] },
    null,
    2
  );
  const start = el("button", {}, ["start session"]);
  start.addEventListener("click", () => {
    const model = JSON.parse(modelBox.value) as ModelDoc;
    void runSession(instance, model);
  });
  root.replaceChildren(
    el("h2", {}, [`instance: ${name}`]),
    el("p", {}, ["model under test (edit before starting):"]),
    modelBox,
    start
  );
}

async function runSession(instance: InstanceDoc, model: ModelDoc): Promise<void> {
  const created = await api.createSession({
    instance,
    model,
    oracle_mode: { mode: "human" },
    budget: 1,
  });
  const flow = new SessionFlow(api, created.session_id);
  await step(flow, instance, model);
}

async function step(
  flow: SessionFlow,
  instance: InstanceDoc,
  model: ModelDoc
): Promise<void> {
  const state = await flow.current();
  if (state.state === "done") {
    await showReport(flow, instance, model);
    return;
  }
  const card = renderCard(state.card, (queryId, answer) => {
    void flow.answer(queryId, answer).then(() => step(flow, instance, model));
  });
  root.replaceChildren(
    el("h2", {}, ["decision-maker question"]),
    card,
    el("p", { class: "progress" }, [`answers so far: ${flow.asked.length - 1}`]),
    renderGraph(graphView(instance, model))
  );
}

async function showReport(
  flow: SessionFlow,
  instance: InstanceDoc,
  model: ModelDoc
): Promise<void> {
  const report = await flow.report();
  const banner = renderBanner(verdictBanner(report));
  const children: (HTMLElement | SVGSVGElement)[] = [banner];
  const transcript = report.transcript as TranscriptDoc | null;
  if (transcript && "verdict" in transcript) {
    children.push(renderChecklist(obligationChecklist(transcript)));
  }
  children.push(renderGraph(graphView(instance, model)));
  const back = el("button", {}, ["back to gallery"]);
  back.addEventListener("click", () => void showGallery());
  children.push(back);
  root.replaceChildren(el("h2", {}, ["verdict"]), ...children);
}

void showGallery();
