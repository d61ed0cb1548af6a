"""Pure-Python retrograde solver kernel.

Fallback twin of the compiled kernel in ``_solver_cy.pyx``; both fill the same
bit table and must stay behaviorally identical.  Positions are visited in
row-major (lexicographic) order, which puts every move target before the
position it is reached from, so a single pass suffices.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"


def solve_into_bits(
    n: int, bound: int, vectors: Sequence[Sequence[int]], bits: bytearray
) -> None:
    """Classify every cell of the box [0, bound)^n; bit set means P-position.

    ``bits`` must hold at least ceil(bound**n / 8) zeroed bytes, indexed
    row-major (last coordinate fastest).
    """
    strides = [bound ** (n - 1 - i) for i in range(n)]
    # (positive components with their coordinate index, linear step) per vector
    comps = []
    for v in vectors:
        pos = [(i, v[i]) for i in range(n) if v[i] > 0]
        step = sum(v[i] * strides[i] for i in range(n))
        comps.append((pos, step))

    cells = bound**n
    coords = [0] * n
    last = n - 1
    for idx in range(cells):
        is_p = True
        for pos, step in comps:
            kmax = min(coords[i] // c for i, c in pos)
            off = idx
            for _ in range(kmax):
                off -= step
                if bits[off >> 3] >> (off & 7) & 1:
                    is_p = False
                    break
            if not is_p:
                break
        if is_p:
            bits[idx >> 3] |= 1 << (idx & 7)
        i = last
        while i >= 0:
            coords[i] += 1
            if coords[i] < bound:
                break
            coords[i] = 0
            i -= 1
