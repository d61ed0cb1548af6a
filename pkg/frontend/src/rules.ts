// Client-side legality pre-check. The server stays authoritative; this only
// exists so obviously-bad submissions (k < 1, heap underflow) surface inline
// before a round-trip.

export function canonicalVectors(n: number): number[][] {
  const vectors: number[][] = [];
  for (let i = 0; i < n; i++) {
    const unit = new Array(n).fill(0);
    unit[i] = 1;
    vectors.push(unit);
  }
  vectors.push(new Array(n).fill(1));
  return vectors;
}

export function unitVector(n: number, heap: number): number[] {
  const v = new Array(n).fill(0);
  v[heap] = 1;
  return v;
}

export function diagonalVector(n: number): number[] {
  return new Array(n).fill(1);
}

// Largest k with pos - k*vector componentwise >= 0; 0 when no k works.
export function maxMultiplier(vector: number[], pos: number[]): number {
  let best = Infinity;
  for (let i = 0; i < vector.length; i++) {
    if (vector[i] > 0) best = Math.min(best, Math.floor(pos[i] / vector[i]));
  }
  return best === Infinity ? 0 : best;
}

export function isLegalMove(pos: number[], vector: number[], k: number): boolean {
  if (!Number.isInteger(k) || k < 1) return false;
  if (vector.length !== pos.length) return false;
  return pos.every((x, i) => x - k * vector[i] >= 0);
}

export function applyMove(pos: number[], vector: number[], k: number): number[] {
  return pos.map((x, i) => x - k * vector[i]);
}

export function isTerminal(pos: number[]): boolean {
  return pos.every((x) => x === 0);
}
