"""Independent brute-force oracles. Nothing here imports the enumeration code under test."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np


def scan_affine_roots(bound: int = 3) -> set[tuple[int, ...]]:
    """Every alpha in [-bound, bound]^10 with alpha.alpha = -2 and alpha.omega_0 = 0,
    reduced mod omega_0 to h-coefficient in {0, 1, 2}."""
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.array(list(product(rng, repeat=5)), dtype=np.int64)
    sq5 = (grid**2).sum(axis=1)
    s5 = grid.sum(axis=1)
    found = set()
    for a in range(-bound, bound + 1):
        # split the 9 e-coefficients as 5 + 4 and join on (sum, sum of squares)
        need_sq = a * a + 2
        need_sum = -3 * a
        tails = {}
        for t in product(range(-bound, bound + 1), repeat=4):
            tails.setdefault((sum(t), sum(x * x for x in t)), []).append(t)
        for row, s, q in zip(grid, s5, sq5):
            if q > need_sq:
                continue
            for t in tails.get((need_sum - s, need_sq - q), ()):
                v = [a, *row.tolist(), *t]
                k = -(a // 3)
                v = [v[0] + 3 * k] + [c - k for c in v[1:]]
                found.add(tuple(v))
    return found


@lru_cache(maxsize=None)
def _box(n: int, bound: int):
    vals = np.arange(-bound, bound + 1, dtype=np.int8)
    grids = np.meshgrid(*([vals] * n), indexing="ij")
    cs = np.stack([g.ravel() for g in grids], axis=1)
    return cs, cs.sum(axis=1, dtype=np.int64), (cs.astype(np.int64) ** 2).sum(axis=1)


def box_curve_classes(n: int, m: int, a_range=range(-6, 7), bound: int = 3) -> set[tuple[int, ...]]:
    """beta = a h + sum c_i e_i (i <= n) in a box, with 3a + sum c = m and a^2 - sum c^2 = m - 2."""
    if n == 0:
        return {(a,) for a in a_range if 3 * a == m and a * a == m - 2}
    cs, s, q = _box(n, bound)
    out = set()
    for a in a_range:
        hit = (3 * a + s == m) & (a * a - q == m - 2)
        for row in cs[hit]:
            out.add((a, *row.tolist()))
    return out


def gram(u, v) -> int:
    return u[0] * v[0] - sum(x * y for x, y in zip(u[1:], v[1:]))
