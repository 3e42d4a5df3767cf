/**
 * Session state as the service reports it.  The explorer never computes
 * algebra on its own: every string and number below came out of a service
 * response and is carried through verbatim.  The only client-side work is
 * equality testing, which is how the period badge is detected.
 */

export interface QuiverDoc {
  b: number[][];
  /** Weights; integers at or beyond 2^53 arrive as decimal strings. */
  w: (number | string)[];
  frozen: number[];
}

export interface VarPair {
  even: string;
  odd: string;
}

export interface SessionState {
  history: number[];
  quiver: QuiverDoc;
  step: number;
  /** Present exactly when the exchange matrix is skew-symmetric. */
  vars: VarPair[] | null;
}

export interface SessionDoc {
  id: string;
  state: SessionState;
}

/** Badge text for a weight, passing big-integer strings through untouched. */
export function weightText(w: number | string): string {
  return typeof w === "string" ? w : String(w);
}

export type Sign = "neg" | "zero" | "pos";

/** Sign read off the rendered text so huge values never go through Number. */
export function signOf(text: string): Sign {
  if (text.startsWith("-")) {
    return "neg";
  }
  return /^0+$/.test(text) ? "zero" : "pos";
}

function permutations(n: number): number[][] {
  if (n === 0) {
    return [[]];
  }
  const out: number[][] = [];
  for (const tail of permutations(n - 1)) {
    for (let k = 0; k < n; k++) {
      const p = tail.slice(0, k);
      p.push(n - 1, ...tail.slice(k));
      out.push(p);
    }
  }
  return out;
}

const RELABEL_LIMIT = 8;

/**
 * True when the two states are the same quiver-plus-variables up to a
 * relabeling of the vertices.  Comparison is pure equality on the data the
 * service sent (matrix entries, weight texts, frozen flags, variable
 * strings).  Searching permutations is factorial, so ranks above
 * RELABEL_LIMIT give up and report false.
 */
export function sameUpToRelabeling(a: SessionState, b: SessionState): boolean {
  const n = a.quiver.b.length;
  if (n !== b.quiver.b.length || n > RELABEL_LIMIT) {
    return false;
  }
  if ((a.vars === null) !== (b.vars === null)) {
    return false;
  }
  const aFrozen = new Set(a.quiver.frozen);
  const bFrozen = new Set(b.quiver.frozen);
  if (aFrozen.size !== bFrozen.size) {
    return false;
  }
  outer: for (const p of permutations(n)) {
    for (let i = 0; i < n; i++) {
      const pi = p[i]!;
      if (weightText(a.quiver.w[i]!) !== weightText(b.quiver.w[pi]!)) {
        continue outer;
      }
      if (aFrozen.has(i) !== bFrozen.has(pi)) {
        continue outer;
      }
      if (a.vars !== null && b.vars !== null) {
        if (
          a.vars[i]!.even !== b.vars[pi]!.even ||
          a.vars[i]!.odd !== b.vars[pi]!.odd
        ) {
          continue outer;
        }
      }
      for (let j = 0; j < n; j++) {
        if (a.quiver.b[i]![j]! !== b.quiver.b[pi]![p[j]!]!) {
          continue outer;
        }
      }
    }
    return true;
  }
  return false;
}

/**
 * Period of the walk when the current state has come back to the start:
 * the current step count if the state matches the initial one up to
 * relabeling, null otherwise.
 */
export function detectReturnPeriod(
  initial: SessionState,
  current: SessionState,
): number | null {
  if (current.step > 0 && sameUpToRelabeling(initial, current)) {
    return current.step;
  }
  return null;
}
