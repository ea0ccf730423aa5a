/** Display-only rounding; stored values are never mutated. */

let displayDigits = 4;

export function setDisplayDigits(digits: number): void {
  if (Number.isInteger(digits) && digits > 0) displayDigits = digits;
}

export function getDisplayDigits(): number {
  return displayDigits;
}

/** Render with the configured number of significant digits. */
export function formatValue(value: number, digits = displayDigits): string {
  if (!Number.isFinite(value)) return String(value);
  const rendered = value.toPrecision(digits);
  // strip trailing zeros from plain decimals but keep exponent forms intact
  return rendered.includes("e") ? rendered : String(Number(rendered));
}

/** Percentage rendering for weight bars. */
export function formatPercent(value: number): string {
  return `${(100 * value).toFixed(1)}%`;
}
