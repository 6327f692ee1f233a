"""Z_d-gradings of E8 induced by pairing roots with omega_d.

Degree 0 holds sl_d (roots inside the negative definite block) together with
the U-duality algebra g_U (roots inside the intersection lattice) and the full
rank 8 Cartan. Degree m in 1..d-1 is Lambda^m of the standard sl_d module
tensored with a g_U module whose weights are represented by their lifts beta.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .lattice import OMEGA0, GradingLabel, LatticeVector, all_labels, get_label, split
from .roots import degree, enumerate_root_classes, normalize_degree

E8_DIM = 248
CARTAN_RANK = 8

# (name, dim, rank, number of roots) of the U-duality algebra per label.
GU_TABLE: dict[str, tuple[str, int, int, int]] = {
    "1": ("E8", 248, 8, 240),
    "2": ("E7", 133, 7, 126),
    "3": ("E6", 78, 6, 72),
    "4": ("D5", 45, 5, 40),
    "5": ("A4", 24, 4, 20),
    "6": ("A1A2", 11, 3, 8),
    "7": ("A1u1", 4, 2, 2),
    "8a": ("u1", 1, 1, 0),
    "8b": ("A1", 3, 1, 2),
    "9": ("", 0, 0, 0),
}


@dataclass(frozen=True, order=True)
class GradedRoot:
    alpha: LatticeVector
    beta: LatticeVector
    gamma: LatticeVector
    m: int


@dataclass(frozen=True)
class Component:
    m: int
    roots: tuple[GradedRoot, ...]
    beta_weights: tuple[LatticeVector, ...]
    gamma_count: int
    dimension: int

    @property
    def beta_multiplicity(self) -> Counter:
        return Counter(r.beta for r in self.roots)


@dataclass(frozen=True)
class Grading:
    label: GradingLabel
    components: tuple[Component, ...]
    gu_name: str
    gu_dim: int
    gu_rank: int

    def component(self, m: int) -> Component:
        return self.components[m]

    def r_dims(self) -> tuple[int, ...]:
        """Dimensions of the g_U modules R^m for m = 1..d-1."""
        return tuple(len(c.beta_weights) for c in self.components[1:])

    def dims(self) -> tuple[int, ...]:
        return tuple(c.dimension for c in self.components)

    def gu_roots(self) -> tuple[LatticeVector, ...]:
        return tuple(sorted(r.beta for r in self.components[0].roots if r.gamma.is_zero()))

    def sl_roots(self) -> tuple[LatticeVector, ...]:
        return tuple(sorted(r.gamma for r in self.components[0].roots if r.beta.is_zero()))


def graded_root(label: GradingLabel | str, alpha: LatticeVector) -> GradedRoot:
    label = get_label(label)
    alpha = normalize_degree(label, alpha)
    beta, gamma = split(label, alpha)
    return GradedRoot(alpha, beta, gamma, degree(label, alpha))


@lru_cache(maxsize=None)
def _build(tag: str) -> Grading:
    label = get_label(tag)
    buckets: list[list[GradedRoot]] = [[] for _ in range(label.d)]
    for rc in enumerate_root_classes():
        gr = graded_root(label, rc.rep)
        buckets[gr.m].append(gr)

    components = []
    for m, bucket in enumerate(buckets):
        bucket.sort()
        betas = tuple(sorted({r.beta for r in bucket}))
        gammas = {r.gamma for r in bucket}
        dim = len(bucket) + (CARTAN_RANK if m == 0 else 0)
        components.append(Component(m, tuple(bucket), betas, len(gammas), dim))

    name, dim, rank, _ = GU_TABLE[label.tag]
    return Grading(label, tuple(components), name, dim, rank)


def build_grading(label: GradingLabel | str) -> Grading:
    return _build(get_label(label).tag)


def duality_map(grading: Grading, m: int) -> dict[GradedRoot, GradedRoot]:
    """alpha -> omega_0 - alpha, a bijection from degree m onto degree d - m."""
    d = grading.label.d
    if not 1 <= m <= d - 1:
        raise ValueError(f"duality is defined for 1 <= m <= {d - 1}, got m={m}")
    target = set(grading.component(d - m).roots)
    out = {}
    for r in grading.component(m).roots:
        image = graded_root(grading.label, OMEGA0 - r.alpha)
        if image not in target:
            raise AssertionError(f"{r.alpha} has dual {image.alpha} outside degree {d - m}")
        out[r] = image
    return out


def dims_table() -> dict[str, tuple[int, ...]]:
    """R^m dimensions for m = 1..d-1, keyed by label tag (empty row for d=1)."""
    return {lab.tag: build_grading(lab).r_dims() for lab in all_labels()}


def exterior_power_dim(label: GradingLabel | str, m: int) -> int:
    return comb(get_label(label).d, m)
