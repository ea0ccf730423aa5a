/** Interactive judgment grid.
 *
 * Upper-triangle cells are editable; each shows the entered value with
 * the service's suggested consistent value beneath it (click to
 * accept).  Lower-triangle cells display the reciprocal of their
 * mirror, the diagonal is fixed at 1.
 */

import { formatValue } from "./format.js";
import { parseJudgment } from "./fraction.js";
import { SessionModel, pairKey } from "./model.js";

export interface GridApi {
  /** Visually mark the three cells of a triad (and their mirrors). */
  highlightTriad(i: number, j: number, k: number): void;
  destroy(): void;
}

interface CellRefs {
  td: HTMLTableCellElement;
  input?: HTMLInputElement;
  derived?: HTMLElement;
  suggestion?: HTMLButtonElement;
}

export function renderGrid(container: HTMLElement, model: SessionModel): GridApi {
  const doc = container.ownerDocument;
  container.classList.add("grid-panel");
  const cells = new Map<string, CellRefs>();
  let highlighted: CellRefs[] = [];

  function build(): void {
    container.textContent = "";
    cells.clear();
    highlighted = [];
    const n = model.n;
    if (!model.session || n === 0) return;
    const labels = model.session.labels;
    const table = doc.createElement("table");
    table.className = "grid";
    const head = table.createTHead().insertRow();
    head.insertCell();
    for (const label of labels) {
      const th = doc.createElement("th");
      th.textContent = label;
      head.appendChild(th);
    }
    const body = table.createTBody();
    for (let i = 1; i <= n; i++) {
      const row = body.insertRow();
      const th = doc.createElement("th");
      th.textContent = labels[i - 1];
      row.appendChild(th);
      for (let j = 1; j <= n; j++) {
        const td = row.insertCell();
        td.className = i === j ? "diagonal" : i < j ? "upper" : "lower";
        if (i === j) {
          td.textContent = "1";
          continue;
        }
        const refs: CellRefs = { td };
        if (i < j) {
          const input = doc.createElement("input");
          input.type = "text";
          input.placeholder = "1";
          input.setAttribute("aria-label", `judgment ${labels[i - 1]} vs ${labels[j - 1]}`);
          input.addEventListener("input", () => {
            if (input.value.trim() === "") {
              input.classList.remove("invalid");
              return;
            }
            const parsed = parseJudgment(input.value);
            if (parsed === null) {
              input.classList.add("invalid");
              return;
            }
            input.classList.remove("invalid");
            void model.submitJudgment(i, j, parsed);
          });
          td.appendChild(input);
          refs.input = input;
        } else {
          const derived = doc.createElement("div");
          derived.className = "derived";
          td.appendChild(derived);
          refs.derived = derived;
        }
        const suggestion = doc.createElement("button");
        suggestion.type = "button";
        suggestion.className = "suggestion";
        suggestion.title = "suggested consistent value (click to accept)";
        if (i < j) {
          suggestion.addEventListener("click", () => void model.acceptSuggestion(i, j));
        } else {
          suggestion.disabled = true;
        }
        td.appendChild(suggestion);
        refs.suggestion = suggestion;
        cells.set(`${i},${j}`, refs);
      }
    }
    container.appendChild(table);
    update();
  }

  function update(): void {
    const active = doc.activeElement;
    for (const [key, refs] of cells) {
      const [i, j] = key.split(",").map(Number);
      const entered = model.enteredValue(i, j);
      if (refs.input && refs.input !== active) {
        refs.input.value = entered === null ? "" : formatValue(entered);
      }
      if (refs.derived) {
        refs.derived.textContent = entered === null ? "·" : formatValue(entered);
      }
      if (refs.suggestion) {
        const value = model.suggestedValue(i, j);
        refs.suggestion.textContent = value === null ? "" : formatValue(value);
        refs.suggestion.classList.toggle("stale", model.analysisStale);
      }
      const error = model.cellError;
      refs.td.classList.toggle("error", Boolean(error && error.i === i && error.j === j));
      refs.td.classList.toggle("pending", model.pendingEdits.has(pairKey(i, j)));
    }
  }

  let builtFor = "";
  const unsubscribe = model.subscribe(() => {
    const key = model.session ? model.session.id : "";
    if (key !== builtFor) {
      builtFor = key;
      build();
    } else {
      update();
    }
  });
  build();
  builtFor = model.session ? model.session.id : "";

  return {
    highlightTriad(i: number, j: number, k: number): void {
      for (const refs of highlighted) refs.td.classList.remove("highlight");
      highlighted = [];
      for (const [a, b] of [
        [i, j],
        [j, k],
        [i, k],
      ]) {
        for (const key of [`${a},${b}`, `${b},${a}`]) {
          const refs = cells.get(key);
          if (refs) {
            refs.td.classList.add("highlight");
            highlighted.push(refs);
          }
        }
      }
    },
    destroy(): void {
      unsubscribe();
      container.textContent = "";
      cells.clear();
    },
  };
}
