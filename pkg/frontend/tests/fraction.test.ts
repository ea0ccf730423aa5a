import { describe, expect, it } from "vitest";

import { parseJudgment } from "../src/fraction.js";

describe("parseJudgment", () => {
  it("parses decimals", () => {
    expect(parseJudgment("2")).toBe(2);
    expect(parseJudgment(" 0.5 ")).toBe(0.5);
    expect(parseJudgment("1e-2")).toBe(0.01);
  });

  it("parses fractions exactly", () => {
    expect(parseJudgment("1/3")).toBe(1 / 3);
    expect(parseJudgment("10/4")).toBe(2.5);
    expect(parseJudgment(" 7 / 2 ")).toBe(3.5);
  });

  it("rejects non-positive values", () => {
    expect(parseJudgment("0")).toBeNull();
    expect(parseJudgment("-2")).toBeNull();
    expect(parseJudgment("-1/3")).toBeNull();
  });

  it("rejects malformed input", () => {
    expect(parseJudgment("")).toBeNull();
    expect(parseJudgment("abc")).toBeNull();
    expect(parseJudgment("1/0")).toBeNull();
    expect(parseJudgment("1.5/2")).toBeNull();
    expect(parseJudgment("1/2/3")).toBeNull();
  });
});
