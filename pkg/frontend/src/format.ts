/** Large-numeral display: indices grow to thousands of digits, so anything
 * past a threshold is elided to head…tail with a digit count, keeping the
 * full string around for expand-on-click. */

export interface Numeral {
  /** The exact decimal string as received from the service. */
  full: string;
  /** What to show collapsed. Equal to `full` when not elided. */
  display: string;
  elided: boolean;
  digits: number;
}

export const DEFAULT_KEEP = 12;

export function elideNumeral(full: string, keep: number = DEFAULT_KEEP): Numeral {
  if (!/^\d+$/.test(full)) {
    throw new Error(`not a decimal numeral: ${JSON.stringify(full.slice(0, 40))}`);
  }
  const digits = full.length;
  if (digits <= 2 * keep + 1) {
    return { full, display: full, elided: false, digits };
  }
  const display = `${full.slice(0, keep)}…(${digits} digits)…${full.slice(-keep)}`;
  return { full, display, elided: true, digits };
}

/** Seconds-precision timestamp for transcript lines. */
export function stamp(date: Date = new Date()): string {
  return date.toISOString().replace(/\.\d+Z$/, "Z");
}
