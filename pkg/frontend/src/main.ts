// Browser bootstrap: wires the store to the DOM. All rendering goes through
// the pure builders in layout-canvas/pareto-chart/editor.

import { ApiClient } from "./api";
import { collectEdit, editorForm } from "./editor";
import { errorBanner, layoutCanvas } from "./layout-canvas";
import { paretoChart } from "./pareto-chart";
import { AppStore, type ViewState } from "./state";
import type { CabinetDocument } from "./types";

const API_BASE = (window as { CABINET_PSA_API?: string }).CABINET_PSA_API ?? "http://127.0.0.1:8099";

const store = new AppStore(new ApiClient(API_BASE));

const el = {
  documentInput: byId<HTMLTextAreaElement>("document-input"),
  uploadButton: byId<HTMLButtonElement>("upload-button"),
  optimizeButton: byId<HTMLButtonElement>("optimize-button"),
  seedInput: byId<HTMLInputElement>("seed-input"),
  t0Input: byId<HTMLInputElement>("t0-input"),
  status: byId<HTMLElement>("status"),
  canvas: byId<HTMLElement>("canvas"),
  editor: byId<HTMLElement>("editor"),
  chart: byId<HTMLElement>("chart"),
  history: byId<HTMLElement>("history"),
};

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

function render(state: ViewState): void {
  el.status.textContent = state.polling
    ? `job ${state.activeJobId} running…`
    : state.cabinetId
      ? `cabinet ${state.cabinetId}`
      : "no cabinet uploaded";
  el.optimizeButton.disabled = state.polling || !state.cabinetId;
  el.uploadButton.disabled = state.polling;

  if (state.jobError) {
    el.canvas.innerHTML = errorBanner(state.jobError);
  } else if (state.result && state.document) {
    el.canvas.innerHTML = layoutCanvas(state.result, state.document, {
      selectedIndex: state.selectedIndex,
    });
  } else {
    el.canvas.innerHTML = "<p class='hint'>upload a cabinet and optimize</p>";
  }

  if (state.result) {
    el.chart.innerHTML = paretoChart(state.result.archive, state.result.recommended.objectives);
  } else {
    el.chart.innerHTML = "";
  }

  const selected = state.document?.components.find((c) => c.index === state.selectedIndex);
  el.editor.innerHTML = selected
    ? editorForm(selected, state.polling, state.editError)
    : "<p class='hint'>click a component to edit it</p>";

  el.history.innerHTML = state.history
    .map((step, i) => {
      const what = step.edit
        ? `edit #${step.edit.index} ${JSON.stringify(step.edit.fields)}`
        : "cold start";
      return `<li>${i + 1}. ${what} → ${step.jobId}: heat=${step.objectives.heat} wire=${step.objectives.wireMm}</li>`;
    })
    .join("");
}

el.uploadButton.addEventListener("click", async () => {
  let doc: CabinetDocument;
  try {
    doc = JSON.parse(el.documentInput.value) as CabinetDocument;
  } catch {
    el.status.textContent = "document is not valid JSON";
    return;
  }
  try {
    await store.uploadCabinet(doc);
  } catch (err) {
    el.status.textContent = String(err);
  }
});

el.optimizeButton.addEventListener("click", () => {
  const request: Record<string, number> = {};
  if (el.seedInput.value) {
    request.rngSeed = Number(el.seedInput.value);
  }
  if (el.t0Input.value) {
    request.initialTemperature = Number(el.t0Input.value);
  }
  store.optimize(request).catch(() => undefined);
});

el.canvas.addEventListener("click", (event) => {
  const target = event.target as Element | null;
  const rect = target?.closest("rect[data-index]");
  if (rect) {
    store.selectComponent(Number(rect.getAttribute("data-index")));
  }
});

el.editor.addEventListener("submit", (event) => {
  event.preventDefault();
  const form = event.target as HTMLFormElement;
  const index = Number(form.dataset.index);
  const component = store.getState().document?.components.find((c) => c.index === index);
  if (!component) {
    return;
  }
  const edit = collectEdit(component, new FormData(form));
  store.submitEdit(index, edit).catch(() => undefined);
});

store.subscribe(render);
render(store.getState());
