"""Picard-lattice layer: Riemann-Roch, rational-curve classes, helices.

Classes live in the first block of the label's splitting (Z^{1,n}, or the
hyperbolic plane H for 8b) and are stored in standard (h, e_i) coordinates.
The anticanonical class -K is the label's omega.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Any, Sequence

from .grading import build_grading
from .lattice import (
    GradingLabel,
    LatticeVector,
    from_hyperbolic,
    from_picard,
    get_label,
    in_first_block,
    inner_product,
    to_picard,
)


@dataclass(frozen=True, order=True)
class PicardClass:
    label: str
    beta: LatticeVector

    def __post_init__(self) -> None:
        if not in_first_block(self.label, self.beta):
            raise ValueError(f"{self.beta} is not in the intersection lattice of dP_{self.label}")

    @classmethod
    def from_coords(cls, label: GradingLabel | str, coords: Sequence[int]) -> PicardClass:
        label = get_label(label)
        return cls(label.tag, from_picard(label, coords))

    def to_list(self) -> list[int]:
        return to_picard(self.label, self.beta)


def _as_vector(label: GradingLabel, beta: PicardClass | LatticeVector) -> LatticeVector:
    if isinstance(beta, PicardClass):
        if beta.label != label.tag:
            raise ValueError(f"class belongs to dP_{beta.label}, not dP_{label.tag}")
        return beta.beta
    if not in_first_block(label, beta):
        raise ValueError(f"{beta} is not in the intersection lattice of dP_{label.tag}")
    return beta


def euler_characteristic(label: GradingLabel | str, beta: PicardClass | LatticeVector) -> int:
    """chi(L) = 1 + L.(L - K)/2 for the line bundle with first Chern class beta."""
    label = get_label(label)
    v = _as_vector(label, beta)
    twice = inner_product(v, v + label.omega)
    if twice % 2:
        raise ArithmeticError(f"L.(L-K) = {twice} is odd for L = {v}")
    return 1 + twice // 2


def _isqrt_floor(x: int) -> int:
    return isqrt(x) if x >= 0 else -1


def _compositions(k: int, total: int, sumsq: int, bound: int) -> list[tuple[int, ...]]:
    """Integer k-tuples with the given sum and sum of squares, entries in [-bound, bound]."""
    if k == 0:
        return [()] if total == 0 and sumsq == 0 else []
    # Cauchy-Schwarz on the remaining k entries
    if sumsq < 0 or total * total > k * sumsq:
        return []
    out = []
    for c in range(-bound, bound + 1):
        rest_sq = sumsq - c * c
        if rest_sq < 0:
            continue
        for tail in _compositions(k - 1, total - c, rest_sq, bound):
            out.append((c,) + tail)
    return out


def _h_coefficient_range(d: int, n: int, m: int) -> range:
    # (m - 3a)^2 <= n (a^2 - m + 2)  <=>  d a^2 - 6 m a + m^2 + n (m - 2) <= 0
    disc = 36 * m * m - 4 * d * (m * m + n * (m - 2))
    if disc < 0:
        return range(0)
    r = isqrt(disc) + 1
    lo = (6 * m - r) // (2 * d) - 1
    hi = (6 * m + r) // (2 * d) + 1
    return range(lo, hi + 1)


def curve_classes(label: GradingLabel | str, m: int) -> list[LatticeVector]:
    """All beta in I_X with (-K).beta = m and beta^2 = m - 2, sorted."""
    label = get_label(label)
    if not 0 <= m <= label.d:
        raise ValueError(f"m must lie in [0, {label.d}], got {m}")
    out = []
    if label.hyperbolic:
        # beta = x f1 + y f2: x + y = m/2, x y = (m - 2)/2
        if m % 2 == 0:
            s, p = m // 2, (m - 2) // 2
            disc = s * s - 4 * p
            r = _isqrt_floor(disc)
            if r >= 0 and r * r == disc and (s + r) % 2 == 0:
                for x in {(s + r) // 2, (s - r) // 2}:
                    out.append(from_hyperbolic((x, s - x)))
        return sorted(out)

    n, d = label.n, label.d
    for a in _h_coefficient_range(d, n, m):
        sumsq = a * a - m + 2
        total = m - 3 * a
        if sumsq < 0 or total * total > n * sumsq:
            continue
        for cs in _compositions(n, total, sumsq, isqrt(sumsq)):
            v = LatticeVector((a,) + cs + (0,) * (9 - n))
            out.append(v)
    return sorted(out)


@dataclass(frozen=True)
class HelicalTest:
    helical: bool
    m: int


def is_helical(label: GradingLabel | str, beta: PicardClass | LatticeVector) -> HelicalTest:
    """Numerical criterion for both (O, L) and (L, -K) to be strongly exceptional."""
    label = get_label(label)
    v = _as_vector(label, beta)
    m = inner_product(label.omega, v)
    by_form = 0 <= m <= label.d and v.norm() == m - 2
    by_chi = (
        0 <= m <= label.d
        and euler_characteristic(label, -v) == 0
        and euler_characteristic(label, v) == m
    )
    assert by_form == by_chi, f"intersection and Euler-characteristic criteria disagree at {v}"
    trivial = v.is_zero() or v == label.omega
    return HelicalTest(by_form and not trivial, m)


def brane_classes(label: GradingLabel | str) -> dict[int, list[LatticeVector]]:
    """Curve classes in the open window 0 < m < d."""
    label = get_label(label)
    return {m: curve_classes(label, m) for m in range(1, label.d)}


def crosscheck_weights(label: GradingLabel | str) -> bool:
    """Do the Diophantine curve classes coincide with the grading's weight lifts?"""
    label = get_label(label)
    grading = build_grading(label)
    return all(
        curve_classes(label, m) == list(grading.component(m).beta_weights)
        for m in range(1, label.d)
    )


# --- helices -----------------------------------------------------------------


def period_length(label: GradingLabel | str) -> int:
    return 12 - get_label(label).d


@dataclass(frozen=True)
class HelixPeriod:
    label: str
    sequence: tuple[LatticeVector, ...]

    @classmethod
    def of(cls, label: GradingLabel | str, classes: Sequence[LatticeVector]) -> HelixPeriod:
        label = get_label(label)
        for v in classes:
            _as_vector(label, v)
        return cls(label.tag, tuple(classes))

    @property
    def N(self) -> int:
        return len(self.sequence) - 1

    def extend(self, k: int) -> LatticeVector:
        """L_k of the full helix, using L_{k+N} = L_k - K."""
        q, r = divmod(k, self.N)
        return self.sequence[r] + q * get_label(self.label).omega


@dataclass(frozen=True)
class PairFailure:
    i: int
    j: int
    diff: LatticeVector
    m: int
    norm: int


@dataclass
class HelixReport:
    label: str
    structural_errors: list[str] = field(default_factory=list)
    failures: list[PairFailure] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.structural_errors and not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "valid": self.valid,
            "structural_errors": self.structural_errors,
            "failing_pairs": [
                {"i": f.i, "j": f.j, "diff": to_picard(self.label, f.diff), "m": f.m, "norm": f.norm}
                for f in self.failures
            ],
        }


def validate_helix_period(period: HelixPeriod) -> HelixReport:
    label = get_label(period.label)
    report = HelixReport(label.tag)
    seq = period.sequence
    expected = period_length(label)
    if len(seq) != expected + 1:
        report.structural_errors.append(
            f"period has {len(seq)} classes, expected {expected + 1} (N = 12 - d = {expected})"
        )
    if not seq or not seq[0].is_zero():
        report.structural_errors.append("L_0 must be the class of O (zero)")
    if not seq or seq[-1] != label.omega:
        report.structural_errors.append("L_N must be -K")
    if report.structural_errors:
        return report
    N = len(seq) - 1
    for i in range(N + 1):
        for j in range(i + 1, N + 1):
            if (i, j) == (0, N):
                continue
            diff = seq[j] - seq[i]
            if not is_helical(label, diff).helical:
                report.failures.append(
                    PairFailure(i, j, diff, inner_product(label.omega, diff), diff.norm())
                )
    return report


@dataclass(frozen=True)
class Quiver:
    """Columns of helix vertices grouped by (-K).L, with arrows between neighbouring columns.

    Vertex ``k`` is L_k of the full helix; negative indices come from completing
    the first column with the recurrence L_{k-N} = L_k + K.
    """

    label: str
    vertices: dict[int, LatticeVector]
    columns: tuple[tuple[int, ...], ...]
    column_degrees: tuple[int, ...]
    arrows: tuple[tuple[int, int, int], ...]
    chi_matrix: tuple[tuple[int, ...], ...]

    def layers(self) -> list[list[tuple[int, int, int]]]:
        col_of = {v: c for c, col in enumerate(self.columns) for v in col}
        out: list[list[tuple[int, int, int]]] = [[] for _ in range(len(self.columns) - 1)]
        for src, dst, mult in self.arrows:
            out[col_of[src]].append((src, dst, mult))
        return out

    def to_dot(self) -> str:
        lines = [f'digraph "helix_dP{self.label}" {{', "  rankdir=LR;"]
        for col in self.columns:
            lines.append("  { rank=same; " + " ".join(f'"{k}";' for k in col) + " }")
        for src, dst, mult in self.arrows:
            for _ in range(mult):
                lines.append(f'  "{src}" -> "{dst}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "vertices": {str(k): to_picard(self.label, v) for k, v in sorted(self.vertices.items())},
            "columns": [list(c) for c in self.columns],
            "column_degrees": list(self.column_degrees),
            "arrows": [{"source": s, "target": t, "multiplicity": m} for s, t, m in self.arrows],
            "chi_matrix": [list(r) for r in self.chi_matrix],
        }


def quiver(period: HelixPeriod, complete_first_column: bool = True) -> Quiver:
    report = validate_helix_period(period)
    if not report.valid:
        raise ValueError(f"helix period does not validate: {report.to_json()}")
    label = get_label(period.label)
    N = period.N
    d = label.d
    vertices = dict(enumerate(period.sequence))
    if complete_first_column:
        for k in range(1, N):
            if inner_product(label.omega, period.sequence[k]) == d:
                vertices[k - N] = period.extend(k - N)

    by_degree: dict[int, list[int]] = {}
    for k, v in vertices.items():
        by_degree.setdefault(inner_product(label.omega, v), []).append(k)
    degrees = tuple(sorted(by_degree))
    columns = tuple(tuple(sorted(by_degree[m])) for m in degrees)

    arrows = []
    for left, right in zip(columns, columns[1:]):
        for i in left:
            for j in right:
                mult = euler_characteristic(label, vertices[j] - vertices[i])
                if mult < 0:
                    raise AssertionError(f"negative arrow count {mult} from {i} to {j}")
                if mult:
                    arrows.append((i, j, mult))

    seq = period.sequence
    chi = tuple(
        tuple(euler_characteristic(label, seq[j] - seq[i]) for j in range(N + 1)) for i in range(N + 1)
    )
    return Quiver(label.tag, vertices, columns, degrees, tuple(arrows), chi)


def load_helix(path: str | Path) -> HelixPeriod:
    doc = json.loads(Path(path).read_text())
    return helix_from_json(doc)


def helix_from_json(doc: dict[str, Any]) -> HelixPeriod:
    try:
        label = get_label(doc["label"])
        rows = doc["period"]
    except KeyError as exc:
        raise ValueError(f"helix file is missing key {exc}") from None
    basis = doc.get("basis", "standard")
    if basis == "hyperbolic":
        if not label.hyperbolic:
            raise ValueError("hyperbolic basis is only meaningful for label 8b")
        classes = [from_hyperbolic([int(x) for x in r]) for r in rows]
    elif basis == "standard":
        classes = [from_picard(label, [int(x) for x in r]) for r in rows]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return HelixPeriod.of(label, classes)


def helix_to_json(period: HelixPeriod) -> dict[str, Any]:
    return {"label": period.label, "period": [to_picard(period.label, v) for v in period.sequence]}

