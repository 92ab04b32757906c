// Component editor form: renders the selected component's editable fields and
// turns submitted form values into an edit payload.

import type { ComponentDoc, ComponentEdit } from "./types";
import { escapeHtml } from "./layout-canvas";

export function editorForm(component: ComponentDoc, disabled: boolean, error: string | null): string {
  const dis = disabled ? " disabled" : "";
  return `
<form class="component-editor" data-index="${component.index}">
  <h3>Component #${component.index} ${escapeHtml(component.id)}</h3>
  <label>width mm <input name="widthMm" type="number" step="0.1" value="${component.widthMm}"${dis}></label>
  <label>height mm <input name="heightMm" type="number" step="0.1" value="${component.heightMm}"${dis}></label>
  <label>depth mm <input name="depthMm" type="number" step="0.1" value="${component.depthMm}"${dis}></label>
  <label>hot <input name="isHot" type="checkbox"${component.isHot ? " checked" : ""}${dis}></label>
  <label>connects to <input name="connectsTo" type="text" value="${component.connectsTo.join(";")}"${dis}></label>
  ${error ? `<p class="inline-error" role="alert">${escapeHtml(error)}</p>` : ""}
  <button type="submit"${dis}>Replace component</button>
</form>`;
}

/**
 * Collect only the fields that actually changed; an empty diff means there is
 * nothing to send.
 */
export function collectEdit(component: ComponentDoc, form: FormData): ComponentEdit {
  const edit: ComponentEdit = {};
  for (const key of ["widthMm", "heightMm", "depthMm"] as const) {
    const raw = form.get(key);
    if (raw !== null && raw !== "") {
      const value = Number(raw);
      if (value !== component[key]) {
        edit[key] = value;
      }
    }
  }
  const isHot = form.get("isHot") !== null;
  if (isHot !== component.isHot) {
    edit.isHot = isHot;
  }
  const rawConnects = form.get("connectsTo");
  if (rawConnects !== null) {
    const targets = String(rawConnects)
      .split(";")
      .map((part) => part.trim())
      .filter((part) => part !== "")
      .map(Number);
    if (!sameList(targets, component.connectsTo)) {
      edit.connectsTo = targets;
    }
  }
  return edit;
}

function sameList(a: number[], b: number[]): boolean {
  return a.length === b.length && a.every((value, i) => value === b[i]);
}
