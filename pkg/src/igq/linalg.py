"""Exact Gaussian elimination over Q: rank, and first linear dependence."""

from __future__ import annotations

from fractions import Fraction


class LinearSieve:
    """Feed vectors one at a time; report the first linear dependence.

    `add` returns None while the vectors stay independent.  When the new
    vector lies in the span of the earlier ones it returns coefficients
    c_0..c_k (with c_k = 1 for the new vector) such that sum c_j v_j = 0.
    """

    def __init__(self):
        self.pivots = []  # (pivot column, normalized row, combination row)
        self.count = 0

    def add(self, vec):
        vec = [Fraction(x) for x in vec]
        combo = [Fraction(0)] * self.count + [Fraction(1)]
        for pc, row, rc in self.pivots:
            f = vec[pc]
            if f:
                vec = [a - f * b for a, b in zip(vec, row)]
                rc_padded = rc + [Fraction(0)] * (len(combo) - len(rc))
                combo = [a - f * b for a, b in zip(combo, rc_padded)]
        self.count += 1
        pc = next((i for i, x in enumerate(vec) if x), None)
        if pc is None:
            return combo
        lead = vec[pc]
        self.pivots.append((pc, [x / lead for x in vec], [x / lead for x in combo]))
        return None


def rank(rows, ncols: int = None) -> int:
    """Rank of a matrix given as a list of coefficient rows over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    width = ncols if ncols is not None else len(m[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
