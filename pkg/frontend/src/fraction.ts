/** Parse a judgment entry: a positive decimal or a fraction like "1/3". */
export function parseJudgment(text: string): number | null {
  const token = text.trim();
  if (!token) return null;
  const slash = token.indexOf("/");
  if (slash >= 0) {
    const num = Number(token.slice(0, slash).trim());
    const den = Number(token.slice(slash + 1).trim());
    if (!Number.isInteger(num) || !Number.isInteger(den) || den === 0) return null;
    const value = num / den;
    return value > 0 && Number.isFinite(value) ? value : null;
  }
  const value = Number(token);
  return Number.isFinite(value) && value > 0 ? value : null;
}
