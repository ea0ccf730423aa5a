/** Worst-triad panel: inconsistency badge, hot-spot list, accept-all. */

import { formatValue } from "./format.js";
import { SessionModel } from "./model.js";

export interface TriadThresholds {
  warn: number;
  bad: number;
}

export const DEFAULT_THRESHOLDS: TriadThresholds = { warn: 0.1, bad: 1 / 3 };

export function badgeClass(value: number, thresholds: TriadThresholds = DEFAULT_THRESHOLDS): string {
  if (value > thresholds.bad) return "badge bad";
  if (value > thresholds.warn) return "badge warn";
  return "badge ok";
}

export function renderTriads(
  container: HTMLElement,
  model: SessionModel,
  onSelect: (i: number, j: number, k: number) => void,
  thresholds: TriadThresholds = DEFAULT_THRESHOLDS,
): () => void {
  const doc = container.ownerDocument;
  container.classList.add("triads-panel");

  function update(): void {
    container.textContent = "";
    const analysis = model.analysis;
    if (!analysis) return;

    const header = doc.createElement("div");
    header.className = "triads-header";
    const badge = doc.createElement("span");
    badge.className = badgeClass(analysis.global_inconsistency, thresholds);
    badge.textContent = formatValue(analysis.global_inconsistency);
    badge.title = "global inconsistency (worst triad)";
    header.appendChild(badge);
    if (model.analysisStale) {
      const stale = doc.createElement("span");
      stale.className = "stale-marker";
      stale.textContent = "updating…";
      header.appendChild(stale);
    }
    const acceptAll = doc.createElement("button");
    acceptAll.type = "button";
    acceptAll.className = "accept-all";
    acceptAll.textContent = "accept all suggestions";
    acceptAll.addEventListener("click", () => void model.acceptAllSuggestions());
    header.appendChild(acceptAll);
    container.appendChild(header);

    const worst = analysis.triads.filter((t) => t.inconsistency > 0);
    if (worst.length === 0) return;
    const list = doc.createElement("ol");
    list.className = "triad-list";
    for (const triad of worst) {
      const item = doc.createElement("li");
      const link = doc.createElement("button");
      link.type = "button";
      link.textContent =
        `(${triad.i},${triad.j},${triad.k})  ${formatValue(triad.inconsistency)}`;
      link.addEventListener("click", () => onSelect(triad.i, triad.j, triad.k));
      item.appendChild(link);
      list.appendChild(item);
    }
    container.appendChild(list);
  }

  const unsubscribe = model.subscribe(update);
  update();
  return unsubscribe;
}
