"""The 240 roots of E8 as classes of real affine roots modulo the null vector omega_0.

Every class has a unique representative in one of three closed-form families
(e_i - e_j, h - e_J with |J| = 3, 2h - e_J with |J| = 6), which is the
label-independent master list. A grading window shifts representatives by
multiples of omega_0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .lattice import OMEGA0, GradingLabel, LatticeVector, e, e_sum, get_label, inner_product, vec


class RootKind(str, enum.Enum):
    E_I_MINUS_E_J = "e_i-e_j"
    H_MINUS_E_J = "h-e_J"
    TWO_H_MINUS_E_J = "2h-e_J"


@dataclass(frozen=True, order=True)
class RootClass:
    rep: LatticeVector
    kind: RootKind


def is_affine_root(alpha: LatticeVector) -> bool:
    return alpha.norm() == -2 and inner_product(alpha, OMEGA0) == 0


@lru_cache(maxsize=None)
def enumerate_root_classes() -> tuple[RootClass, ...]:
    """All 240 root classes, sorted lexicographically by representative."""
    out = []
    for i, j in permutations(range(1, 10), 2):
        out.append(RootClass(e(i) - e(j), RootKind.E_I_MINUS_E_J))
    for J in combinations(range(1, 10), 3):
        out.append(RootClass(vec(1) - e_sum(J), RootKind.H_MINUS_E_J))
    for J in combinations(range(1, 10), 6):
        out.append(RootClass(vec(2) - e_sum(J), RootKind.TWO_H_MINUS_E_J))
    return tuple(sorted(out))


def classify(alpha: LatticeVector) -> RootKind:
    """Kind of the canonical representative of alpha's class mod omega_0."""
    canon = canonical_rep(alpha)
    a = canon.coeffs[0]
    return {0: RootKind.E_I_MINUS_E_J, 1: RootKind.H_MINUS_E_J, 2: RootKind.TWO_H_MINUS_E_J}[a]


def canonical_rep(alpha: LatticeVector) -> LatticeVector:
    """Shift by omega_0 so that the h-coefficient lies in {0, 1, 2}."""
    if not is_affine_root(alpha):
        raise ValueError(f"{alpha} is not a real root of the affine E8 lattice")
    k = -(alpha.coeffs[0] // 3)
    return alpha + k * OMEGA0


def degree(label: GradingLabel | str, alpha: LatticeVector) -> int:
    return inner_product(get_label(label).omega, alpha)


def normalize_degree(label: GradingLabel | str, alpha: LatticeVector) -> LatticeVector:
    """The representative alpha + k*omega_0 whose degree lies in [0, d)."""
    label = get_label(label)
    m = degree(label, alpha)
    # omega_label . omega_0 = d
    return alpha + (-(m // label.d)) * OMEGA0
