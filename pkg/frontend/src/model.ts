/** Session state and the edit/analysis loop.
 *
 * All numbers come from the service; this module never computes
 * projections or reciprocals beyond displaying 1/x for the lower
 * triangle.  Every committed edit issues exactly one judgment PUT; the
 * analysis refresh is debounced and single-flight, and whichever
 * response carries the highest version wins the display.
 */

import { Analysis, ApiError, ServiceClient, SessionInfo } from "./api.js";
import { Debouncer } from "./debounce.js";

export interface CellError {
  i: number;
  j: number;
  message: string;
}

export type Listener = () => void;

export function pairKey(i: number, j: number): string {
  return i < j ? `${i},${j}` : `${j},${i}`;
}

export class SessionModel {
  session: SessionInfo | null = null;
  analysis: Analysis | null = null;
  /** upper-triangle keys edited at a version the shown analysis predates */
  readonly pendingEdits = new Map<string, number>();
  cellError: CellError | null = null;

  private readonly listeners = new Set<Listener>();
  private analysisInFlight = false;
  private analysisQueued = false;

  constructor(
    private readonly client: ServiceClient,
    private readonly refreshDebounce = new Debouncer(150),
  ) {}

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  get n(): number {
    return this.session ? this.session.labels.length : 0;
  }

  /** Displayed analysis lags the session whenever edits are newer. */
  get analysisStale(): boolean {
    return Boolean(
      this.session && this.analysis && this.analysis.version < this.session.version,
    );
  }

  async createSession(labels: string[]): Promise<void> {
    this.session = await this.client.createSession(labels);
    this.analysis = null;
    this.pendingEdits.clear();
    this.emit();
    await this.refreshAnalysis();
  }

  /** Entered value for any cell: diagonal 1, lower = reciprocal of upper. */
  enteredValue(i: number, j: number): number | null {
    if (!this.session) return null;
    if (i === j) return 1;
    const upper = i < j;
    const [a, b] = upper ? [i, j] : [j, i];
    const judgment = this.session.judgments.find((x) => x.i === a && x.j === b);
    if (!judgment) return null;
    return upper ? judgment.value : 1 / judgment.value;
  }

  /** Suggested consistent value from the latest analysis, if any. */
  suggestedValue(i: number, j: number): number | null {
    if (!this.analysis) return null;
    const row = this.analysis.consistent[i - 1];
    return row ? (row[j - 1] ?? null) : null;
  }

  async submitJudgment(i: number, j: number, value: number): Promise<boolean> {
    if (!this.session) return false;
    try {
      const updated = await this.client.putJudgment(this.session.id, i, j, value);
      if (!this.session || updated.version > this.session.version) {
        this.session = updated;
      }
      this.pendingEdits.set(pairKey(i, j), updated.version);
      if (this.cellError && this.cellError.i === i && this.cellError.j === j) {
        this.cellError = null;
      }
      this.emit();
      this.scheduleAnalysisRefresh();
      return true;
    } catch (error) {
      if (error instanceof ApiError) {
        this.cellError = { i, j, message: error.message };
        this.emit();
        return false;
      }
      throw error;
    }
  }

  /** Write the service's suggested consistent value into one cell. */
  async acceptSuggestion(i: number, j: number): Promise<boolean> {
    const suggested = this.suggestedValue(i, j);
    if (suggested === null) return false;
    return this.submitJudgment(i, j, suggested);
  }

  /** Adopt the whole suggested consistent matrix (one PUT per upper cell). */
  async acceptAllSuggestions(): Promise<void> {
    if (!this.analysis || !this.session) return;
    const snapshot = this.analysis.consistent;
    const n = this.n;
    for (let i = 1; i <= n; i++) {
      for (let j = i + 1; j <= n; j++) {
        await this.submitJudgment(i, j, snapshot[i - 1][j - 1]);
      }
    }
    await this.flushAnalysis();
  }

  scheduleAnalysisRefresh(): void {
    this.refreshDebounce.schedule(() => void this.refreshAnalysis());
  }

  /** Cancel the debounce and refresh immediately (used by tests/accept-all). */
  async flushAnalysis(): Promise<void> {
    this.refreshDebounce.cancel();
    await this.refreshAnalysis();
  }

  async refreshAnalysis(): Promise<void> {
    if (!this.session) return;
    if (this.analysisInFlight) {
      this.analysisQueued = true;
      return;
    }
    this.analysisInFlight = true;
    try {
      const incoming = await this.client.getAnalysis(this.session.id);
      if (!this.analysis || incoming.version >= this.analysis.version) {
        this.analysis = incoming;
        for (const [key, version] of this.pendingEdits) {
          if (version <= incoming.version) this.pendingEdits.delete(key);
        }
      }
    } finally {
      this.analysisInFlight = false;
    }
    this.emit();
    if (this.analysisQueued || this.analysisStale) {
      this.analysisQueued = false;
      await this.refreshAnalysis();
    }
  }
}
