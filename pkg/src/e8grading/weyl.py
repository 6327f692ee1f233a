"""Weyl group of g_U acting on the intersection lattice, by reflection closure.

Orbits are computed by breadth-first closure under the simple reflections
rather than by listing group elements: the largest weight set in play has 56
elements while W(E8) has about 7e8.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .grading import build_grading
from .lattice import F1, F2, GradingLabel, LatticeVector, e, e_sum, get_label, inner_product, reflect, vec

ORBIT_CAP = 10**6


@dataclass(frozen=True)
class ReflectionGroup:
    label: GradingLabel
    generators: tuple[LatticeVector, ...]

    def images(self, v: LatticeVector) -> list[LatticeVector]:
        return [reflect(v, g) for g in self.generators]


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[tuple[LatticeVector, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(o) for o in self.orbits), reverse=True))

    def __len__(self) -> int:
        return len(self.orbits)


def gu_generators(label: GradingLabel | str, extra: bool = True) -> ReflectionGroup:
    """Simple reflections of W(g_U).

    With ``extra=False`` only the S_n transpositions are kept, which is the
    subgroup that separates the weight shapes.
    """
    label = get_label(label)
    if label.hyperbolic:
        return ReflectionGroup(label, (F1 - F2,))
    n = label.n
    gens = [e(i) - e(i + 1) for i in range(1, n)]
    if extra and n >= 3:
        gens.append(vec(1) - e_sum((1, 2, 3)))
    for g in gens:
        assert g.norm() == -2 and inner_product(g, label.omega) == 0
    return ReflectionGroup(label, tuple(gens))


def orbit(start: LatticeVector, group: ReflectionGroup) -> tuple[LatticeVector, ...]:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = set()
        for v in frontier:
            for w in group.images(v):
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        if len(seen) > ORBIT_CAP:
            raise RuntimeError(f"orbit of {start} exceeded {ORBIT_CAP} elements")
        frontier = sorted(nxt)
    return tuple(sorted(seen))


def orbit_decompose(vectors: Iterable[LatticeVector], group: ReflectionGroup) -> OrbitDecomposition:
    pool = set(vectors)
    for v in pool:
        for w in group.images(v):
            if w not in pool:
                raise ValueError(f"vector set is not closed: {v} reflects to {w}")
    remaining = set(pool)
    orbits = []
    for v in sorted(pool):
        if v not in remaining:
            continue
        o = orbit(v, group)
        remaining.difference_update(o)
        orbits.append(o)
    return OrbitDecomposition(tuple(orbits))


APPENDIX_TAGS = ("2", "3", "4", "5", "6", "7", "8a")
SHAPES = ("e_i", "h-e_J", "2h-e_J", "omega-e_i")


@dataclass(frozen=True)
class AppendixRow:
    """Counts of beta-weights by shape; ``None`` where the shape cannot occur."""

    d: int
    n: int
    m: int
    e_i: int | None
    h_minus_e_j: int | None
    two_h_minus_e_j: int | None
    omega_minus_e_i: int | None
    total: int

    @property
    def counts(self) -> tuple[int | None, ...]:
        return (self.e_i, self.h_minus_e_j, self.two_h_minus_e_j, self.omega_minus_e_i)


def _shape(label: GradingLabel, beta: LatticeVector) -> int:
    """Index into SHAPES, checking the weight really has that form."""
    n = label.n
    a = beta.coeffs[0]
    c = beta.coeffs[1 : n + 1]
    if a == 3:
        c = tuple(x - y for x, y in zip(c, label.omega.coeffs[1 : n + 1]))
        if sorted(c) == [-1] + [0] * (n - 1):
            return 3
    elif a == 0 and sorted(c) == [0] * (n - 1) + [1]:
        return 0
    elif a in (1, 2) and all(x in (0, -1) for x in c):
        return a
    raise ValueError(f"{beta} is not one of the four weight shapes")


def appendix_counts(label: GradingLabel | str) -> list[AppendixRow]:
    label = get_label(label)
    if label.tag not in APPENDIX_TAGS:
        raise ValueError(f"the shape table covers labels {', '.join(APPENDIX_TAGS)}, not {label.tag}")
    n, d = label.n, label.d
    grading = build_grading(label)
    rows = []
    for m in range(1, d):
        weights = grading.component(m).beta_weights
        counts = [0, 0, 0, 0]
        for beta in weights:
            counts[_shape(label, beta)] += 1
        applicable = (m == 1, 0 <= 3 - m <= n, 0 <= 6 - m <= n, m == d - 1)
        cells = []
        for ok, k in zip(applicable, counts):
            if not ok and k:
                raise AssertionError(f"unexpected weight shape at d={d}, m={m}")
            cells.append(k if ok else None)
        rows.append(AppendixRow(d, n, m, *cells, total=len(weights)))
    return rows
