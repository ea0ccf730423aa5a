/** Bootstrap: session form, then grid + triad panel + weight bars. */

import { ServiceClient } from "./api.js";
import { setDisplayDigits } from "./format.js";
import { renderGrid } from "./grid.js";
import { SessionModel } from "./model.js";
import { renderTriads } from "./triads.js";
import { renderWeights } from "./weights.js";

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

function start(): void {
  const model = new SessionModel(new ServiceClient(""));
  const form = byId("session-form") as HTMLFormElement;
  const labelsInput = byId("labels-input") as HTMLInputElement;
  const digitsInput = byId("digits-input") as HTMLInputElement;
  const formError = byId("form-error");

  digitsInput.addEventListener("change", () => {
    setDisplayDigits(Number(digitsInput.value));
    model.scheduleAnalysisRefresh();
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const labels = labelsInput.value
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    formError.textContent = "";
    model.createSession(labels).then(
      () => {
        byId("workspace").hidden = false;
      },
      (error: unknown) => {
        formError.textContent = error instanceof Error ? error.message : String(error);
      },
    );
  });

  const gridApi = renderGrid(byId("grid"), model);
  renderTriads(byId("triads"), model, (i, j, k) => gridApi.highlightTriad(i, j, k));
  renderWeights(byId("weights"), model);
}

document.addEventListener("DOMContentLoaded", start);
