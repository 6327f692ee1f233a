"""Z_d-gradings of E8 from co-weights on Z^{1,9}, and the matching rational-curve
classes on del Pezzo surfaces."""

from .delpezzo import (
    HelixPeriod,
    PicardClass,
    crosscheck_weights,
    curve_classes,
    euler_characteristic,
    is_helical,
    quiver,
    validate_helix_period,
)
from .grading import Grading, GradedRoot, build_grading, dims_table, duality_map
from .lattice import LABELS, GradingLabel, LatticeVector, get_label, inner_product, reflect, split
from .roots import RootClass, degree, enumerate_root_classes, normalize_degree
from .weyl import ReflectionGroup, appendix_counts, gu_generators, orbit, orbit_decompose

__version__ = "0.1.0"
