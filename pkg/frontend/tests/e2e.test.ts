/** Elicitation loop against the real Python service.
 *
 * Spawns `python3 -m concord.service` on a free port and drives the
 * same client/model stack the browser uses: enter judgments (2, 2, 5)
 * on three stimuli, see triad (1,2,3) at inconsistency 0.2 with a
 * suggested consistent value in cell (1,3), accept the suggestions,
 * and watch global inconsistency drop below 1e-9.
 */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ServiceClient } from "../src/api.js";
import { SessionModel } from "../src/model.js";

const PORT = 8370 + Math.floor(Math.random() * 500);
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;

async function waitForService(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/sessions/probe`);
      if (response.status === 404) return; // service is answering
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  service = spawn("python3", ["-m", "concord.service", "--addr", `127.0.0.1:${PORT}`], {
    stdio: "ignore",
  });
  await waitForService();
}, 30000);

afterAll(() => {
  service?.kill();
});

describe("elicitation loop", () => {
  it("surfaces the worst triad and reaches consistency after accepting", async () => {
    const client = new ServiceClient(BASE);
    const model = new SessionModel(client);
    await model.createSession(["fast", "cheap", "good"]);

    await model.submitJudgment(1, 2, 2);
    await model.submitJudgment(2, 3, 2);
    await model.submitJudgment(1, 3, 5);
    await model.flushAnalysis(); // one analysis round trip

    const analysis = model.analysis!;
    expect(analysis.version).toBe(model.session!.version);
    const worst = analysis.triads[0];
    expect([worst.i, worst.j, worst.k]).toEqual([1, 2, 3]);
    expect(worst.inconsistency).toBeCloseTo(0.2, 12);
    expect(analysis.global_inconsistency).toBeCloseTo(0.2, 12);

    // the suggested consistent closing value appears in cell (1,3)
    const suggested = model.suggestedValue(1, 3)!;
    expect(suggested).toBeCloseTo(Math.pow(10, 2 / 3), 9);

    await model.acceptAllSuggestions();
    expect(model.analysis!.global_inconsistency).toBeLessThan(1e-9);
    expect(model.analysisStale).toBe(false);

    await client.deleteSession(model.session!.id);
  }, 30000);

  it("rejects bad judgments with a cell-level error", async () => {
    const client = new ServiceClient(BASE);
    const model = new SessionModel(client);
    await model.createSession(["x", "y"]);
    const ok = await model.submitJudgment(1, 1, 3);
    expect(ok).toBe(false);
    expect(model.cellError?.i).toBe(1);
    await client.deleteSession(model.session!.id);
  }, 15000);
});
