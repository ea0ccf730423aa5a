/** Priority bars: normalized weights sorted descending. */

import { formatPercent, formatValue } from "./format.js";
import { SessionModel } from "./model.js";

export function renderWeights(container: HTMLElement, model: SessionModel): () => void {
  const doc = container.ownerDocument;
  container.classList.add("weights-panel");

  function update(): void {
    container.textContent = "";
    const analysis = model.analysis;
    if (!analysis) return;
    const order = analysis.weights
      .map((value, index) => ({ value, label: analysis.labels[index] }))
      .sort((a, b) => b.value - a.value);
    const max = order.length ? order[0].value : 1;
    for (const { value, label } of order) {
      const row = doc.createElement("div");
      row.className = "weight-row";
      const name = doc.createElement("span");
      name.className = "weight-label";
      name.textContent = label;
      const bar = doc.createElement("div");
      bar.className = "weight-bar";
      bar.style.width = `${(100 * value) / max}%`;
      bar.title = formatValue(value);
      const amount = doc.createElement("span");
      amount.className = "weight-value";
      amount.textContent = formatPercent(value);
      row.append(name, bar, amount);
      container.appendChild(row);
    }
  }

  const unsubscribe = model.subscribe(update);
  update();
  return unsubscribe;
}
