"""Reference values that the computations are checked against.

Shape-count rows use ``None`` for blank cells: shapes that cannot occur at
that (d, m).
"""

from __future__ import annotations

from .lattice import E0, F1, F2, LatticeVector, e, vec

# g_U module dimensions R^m_d for m = 1..d-1.
R_DIMS = {
    "2": (56,),
    "3": (27, 27),
    "4": (16, 10, 16),
    "5": (10, 5, 5, 10),
    "6": (6, 3, 2, 3, 6),
    "7": (3, 2, 1, 1, 2, 3),
    "8a": (1, 1, 1, 0, 1, 1, 1),
    "8b": (0, 2, 0, 1, 0, 2, 0),
    "9": (0, 0, 1, 0, 0, 1, 0, 0),
}

_ = None
# (d, n, m): (e_i, h - e_J, 2h - e_J, omega - e_i, total)
SHAPE_COUNTS = {
    (2, 7, 1): (7, 21, 21, 7, 56),
    (3, 6, 1): (6, 15, 6, _, 27),
    (3, 6, 2): (_, 6, 15, 6, 27),
    (4, 5, 1): (5, 10, 1, _, 16),
    (4, 5, 2): (_, 5, 5, _, 10),
    (4, 5, 3): (_, 1, 10, 5, 16),
    (5, 4, 1): (4, 6, _, _, 10),
    (5, 4, 2): (_, 4, 1, _, 5),
    (5, 4, 3): (_, 1, 4, _, 5),
    (5, 4, 4): (_, _, 6, 4, 10),
    (6, 3, 1): (3, 3, _, _, 6),
    (6, 3, 2): (_, 3, _, _, 3),
    (6, 3, 3): (_, 1, 1, _, 2),
    (6, 3, 4): (_, _, 3, _, 3),
    (6, 3, 5): (_, _, 3, 3, 6),
    (7, 2, 1): (2, 1, _, _, 3),
    (7, 2, 2): (_, 2, _, _, 2),
    (7, 2, 3): (_, 1, _, _, 1),
    (7, 2, 4): (_, _, 1, _, 1),
    (7, 2, 5): (_, _, 2, _, 2),
    (7, 2, 6): (_, _, 1, 2, 3),
    (8, 1, 1): (1, _, _, _, 1),
    (8, 1, 2): (_, 1, _, _, 1),
    (8, 1, 3): (_, 1, _, _, 1),
    (8, 1, 4): (_, _, _, _, 0),
    (8, 1, 5): (_, _, 1, _, 1),
    (8, 1, 6): (_, _, 1, _, 1),
    (8, 1, 7): (_, _, _, 1, 1),
}
del _

# Full component dimensions (degree 0 first) for the ten-dimensional cases.
COMPONENT_DIMS = {
    "9": (80, 0, 0, 84, 0, 0, 84, 0, 0),
    "8a": (64, 8, 28, 56, 0, 56, 28, 8),
    "8b": (66, 0, 56, 0, 70, 0, 56, 0),
}

# Period of length 8 on dP_4: O, e_0, e_3, e_4, e_5, f_1, f_2, f_1 + f_2, -K.
DP4_HELIX: tuple[LatticeVector, ...] = (
    LatticeVector.zero(),
    E0,
    e(3),
    e(4),
    e(5),
    F1,
    F2,
    F1 + F2,
    vec(3, e1=-1, e2=-1, e3=-1, e4=-1, e5=-1),
)

# O, O(1), O(2), O(3) on the projective plane.
P2_HELIX: tuple[LatticeVector, ...] = tuple(vec(k) for k in range(4))
