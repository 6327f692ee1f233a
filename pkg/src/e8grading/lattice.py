"""Exact model of the Minkowski lattice Z^{1,9}.

Vectors are stored as raw integer coefficients over the ordered basis
``(h, e_1, ..., e_9)`` with ``h.h = 1`` and ``e_i.e_i = -1``. Anticanonical
classes and the like carry their minus signs explicitly, e.g. ``-K`` on the
degree 4 surface is ``(3, -1, -1, -1, -1, -1, 0, 0, 0, 0)``.

Each grading label fixes an orthogonal splitting of the ambient lattice into
an intersection-lattice block and a negative definite block; see
:class:`GradingLabel`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

RANK = 10


@dataclass(frozen=True, order=True, slots=True)
class LatticeVector:
    """An element of Z^{1,9}, compared and ordered by its coefficient tuple."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != RANK:
            raise ValueError(f"expected {RANK} coefficients, got {len(self.coeffs)}")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be integers")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> LatticeVector:
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls) -> LatticeVector:
        return cls((0,) * RANK)

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> LatticeVector:
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: LatticeVector) -> int:
        return inner_product(self, other)

    def norm(self) -> int:
        return inner_product(self, self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"LatticeVector({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_vector(self)


def inner_product(u: LatticeVector, v: LatticeVector) -> int:
    a, b = u.coeffs, v.coeffs
    return a[0] * b[0] - sum(a[i] * b[i] for i in range(1, RANK))


def h() -> LatticeVector:
    return LatticeVector((1,) + (0,) * 9)


def e(i: int) -> LatticeVector:
    """Basis vector e_i for 1 <= i <= 9."""
    if not 1 <= i <= 9:
        raise ValueError(f"e_{i} is not a basis vector (need 1 <= i <= 9)")
    c = [0] * RANK
    c[i] = 1
    return LatticeVector(tuple(c))


def e_sum(indices: Iterable[int]) -> LatticeVector:
    """e_I = sum of e_i over the index set I."""
    c = [0] * RANK
    for i in indices:
        if not 1 <= i <= 9:
            raise ValueError(f"e_{i} is not a basis vector")
        c[i] += 1
    return LatticeVector(tuple(c))


def vec(a: int = 0, **es: int) -> LatticeVector:
    """Shorthand: ``vec(2, e1=-1, e7=-1)`` is 2h - e_1 - e_7."""
    c = [a] + [0] * 9
    for key, val in es.items():
        if not key.startswith("e"):
            raise ValueError(f"bad basis name {key!r}")
        c[int(key[1:])] += val
    return LatticeVector(tuple(c))


OMEGA0 = vec(3) - e_sum(range(1, 10))

# Hyperbolic basis of the 8b branch.
F1 = h() - e(1)
F2 = h() - e(2)
E0 = h() - e(1) - e(2)

# Fundamental weights at the primed vertices of the extended diagram.
OMEGA_2P = h() - e(1)
OMEGA_3P = h()
OMEGA_4P = vec(2) - e(1) - e(2)


def reflect(v: LatticeVector, alpha: LatticeVector) -> LatticeVector:
    """Reflection of ``v`` in the hyperplane orthogonal to the root ``alpha``."""
    if alpha.norm() != -2:
        raise ValueError(f"reflection needs a norm -2 vector, got norm {alpha.norm()}")
    return v + inner_product(v, alpha) * alpha


@dataclass(frozen=True)
class GradingLabel:
    """One of the ten cases 1..7, 8a, 8b, 9.

    ``first_block`` spans the intersection lattice I_X (Z^{1,n}, or the
    hyperbolic plane H for 8b); ``second_block`` is the negative definite
    standard lattice Z^d whose coordinate sum is measured by ``delta``.
    """

    tag: str
    d: int
    n: int | None
    omega: LatticeVector
    delta: LatticeVector
    first_block: tuple[LatticeVector, ...] = field(repr=False)
    second_block: tuple[LatticeVector, ...] = field(repr=False)

    @property
    def hyperbolic(self) -> bool:
        return self.tag == "8b"

    @property
    def d_mod(self) -> int:
        return self.d

    @property
    def picard_dim(self) -> int:
        """Length of a Picard-class serialization in standard coordinates."""
        return 3 if self.hyperbolic else self.n + 1

    def __str__(self) -> str:
        return self.tag


def _standard_label(tag: str, n: int) -> GradingLabel:
    d = 9 - n
    return GradingLabel(
        tag=tag,
        d=d,
        n=n,
        omega=vec(3) - e_sum(range(1, n + 1)),
        delta=e_sum(range(n + 1, 10)),
        first_block=(h(),) + tuple(e(i) for i in range(1, n + 1)),
        second_block=tuple(e(i) for i in range(n + 1, 10)),
    )


def _label_8b() -> GradingLabel:
    second = tuple(e(i) for i in range(3, 10)) + (E0,)
    delta = LatticeVector.zero()
    for b in second:
        delta = delta + b
    return GradingLabel(
        tag="8b",
        d=8,
        n=None,
        omega=vec(4, e1=-2, e2=-2),
        delta=delta,
        first_block=(F1, F2),
        second_block=second,
    )


LABEL_TAGS = ("1", "2", "3", "4", "5", "6", "7", "8a", "8b", "9")

LABELS: dict[str, GradingLabel] = {
    **{str(d): _standard_label(str(d), 9 - d) for d in range(1, 8)},
    "8a": _standard_label("8a", 1),
    "8b": _label_8b(),
    "9": _standard_label("9", 0),
}


def get_label(tag: str | int | GradingLabel) -> GradingLabel:
    if isinstance(tag, GradingLabel):
        return tag
    key = str(tag)
    if key not in LABELS:
        raise ValueError(f"unknown grading label {key!r}; expected one of {', '.join(LABEL_TAGS)}")
    return LABELS[key]


def all_labels() -> list[GradingLabel]:
    return [LABELS[t] for t in LABEL_TAGS]


def to_hyperbolic(v: LatticeVector) -> tuple[int, ...]:
    """Coordinates over (f_1, f_2, e_3, ..., e_9, e_0)."""
    x = inner_product(v, F2)
    y = inner_product(v, F1)
    rest = tuple(-inner_product(v, e(i)) for i in range(3, 10))
    return (x, y) + rest + (-inner_product(v, E0),)


def from_hyperbolic(coords: Sequence[int]) -> LatticeVector:
    if len(coords) == 2:
        coords = tuple(coords) + (0,) * 8
    if len(coords) != RANK:
        raise ValueError("hyperbolic coordinates need 2 or 10 entries")
    basis = (F1, F2) + tuple(e(i) for i in range(3, 10)) + (E0,)
    out = LatticeVector.zero()
    for c, b in zip(coords, basis):
        out = out + int(c) * b
    return out


def split(label: GradingLabel | str, alpha: LatticeVector) -> tuple[LatticeVector, LatticeVector]:
    """Orthogonal decomposition alpha = beta + gamma along the label's blocks."""
    label = get_label(label)
    if label.hyperbolic:
        beta = inner_product(alpha, F2) * F1 + inner_product(alpha, F1) * F2
    else:
        k = label.n + 1
        beta = LatticeVector(alpha.coeffs[:k] + (0,) * (RANK - k))
    return beta, alpha - beta


def in_first_block(label: GradingLabel | str, v: LatticeVector) -> bool:
    _, gamma = split(label, v)
    return gamma.is_zero()


def to_picard(label: GradingLabel | str, v: LatticeVector) -> list[int]:
    """Serialize a first-block vector in standard coordinates (n+1 ints, or 3 for 8b)."""
    label = get_label(label)
    if not in_first_block(label, v):
        raise ValueError(f"{v} is not in the intersection lattice of dP_{label.tag}")
    return list(v.coeffs[: label.picard_dim])


def from_picard(label: GradingLabel | str, coords: Sequence[int]) -> LatticeVector:
    label = get_label(label)
    if len(coords) != label.picard_dim:
        raise ValueError(
            f"dP_{label.tag} classes have {label.picard_dim} coordinates, got {len(coords)}"
        )
    v = LatticeVector(tuple(int(c) for c in coords) + (0,) * (RANK - len(coords)))
    if not in_first_block(label, v):
        raise ValueError(f"{list(coords)} is not in the intersection lattice of dP_{label.tag}")
    return v


def format_vector(v: LatticeVector) -> str:
    """Human form such as ``2h - e1 - e7``."""
    terms = []
    names = ["h"] + [f"e{i}" for i in range(1, 10)]
    for c, name in zip(v.coeffs, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, mag + name))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out
