"""Registry of end-to-end checks replayed by ``e8grading verify``.

Each check returns ``(passed, details)``. All quantities are integers and
every comparison is exact.
"""

from __future__ import annotations

import random
from typing import Any, Callable

from . import reference
from .delpezzo import (
    HelixPeriod,
    crosscheck_weights,
    curve_classes,
    euler_characteristic,
    quiver,
    validate_helix_period,
)
from .grading import E8_DIM, GU_TABLE, build_grading, dims_table, duality_map
from .lattice import (
    OMEGA0,
    OMEGA_2P,
    OMEGA_3P,
    OMEGA_4P,
    RANK,
    LatticeVector,
    all_labels,
    from_hyperbolic,
    get_label,
    inner_product,
    reflect,
    split,
    to_hyperbolic,
)
from .roots import RootKind, canonical_rep, enumerate_root_classes
from .weyl import APPENDIX_TAGS, appendix_counts, gu_generators, orbit_decompose

CheckResult = tuple[bool, Any]
CHECKS: dict[str, Callable[[], CheckResult]] = {}

FUZZ_SAMPLES = 1000
FUZZ_SEED = 20001


def check(name: str):
    def register(fn: Callable[[], CheckResult]) -> Callable[[], CheckResult]:
        if name in CHECKS:
            raise ValueError(f"duplicate check {name}")
        CHECKS[name] = fn
        return fn

    return register


def scan_roots(bound: int = 3) -> set[LatticeVector]:
    """Bounded-coefficient search for norm -2 vectors orthogonal to omega_0, reduced mod omega_0.

    Independent of the closed-form families: every coefficient ranges over
    [-bound, bound] subject only to running sum-of-squares pruning.
    """
    found = set()
    for a in range(-bound, bound + 1):
        target_sq = a * a + 2  # sum c_i^2
        target_sum = -3 * a  # alpha . omega_0 = 3a + sum c_i

        def rec(prefix: list[int], sq: int) -> None:
            if len(prefix) == 9:
                if sq == target_sq and sum(prefix) == target_sum:
                    found.add(canonical_rep(LatticeVector((a, *prefix))))
                return
            for c in range(-bound, bound + 1):
                if sq + c * c <= target_sq:
                    prefix.append(c)
                    rec(prefix, sq + c * c)
                    prefix.pop()

        rec([], 0)
    return found


@check("root_census")
def _root_census() -> CheckResult:
    classes = enumerate_root_classes()
    reps = [rc.rep for rc in classes]
    families = tuple(sum(rc.kind is k for rc in classes) for k in RootKind)
    distinct = len({canonical_rep(r) for r in reps})
    oracle = scan_roots()
    ok = len(classes) == 240 and families == (72, 84, 84) and distinct == 240 and oracle == set(reps)
    return ok, {"count": len(classes), "families": families, "distinct_mod_omega0": distinct, "oracle": len(oracle)}


@check("r_dimension_grid")
def _r_dims() -> CheckResult:
    table = dims_table()
    bad = {t: table[t] for t, row in reference.R_DIMS.items() if table[t] != row}
    return not bad, bad or "all 9 rows match"


@check("dimension_sums")
def _dimension_sums() -> CheckResult:
    bad = {}
    for label in all_labels():
        g = build_grading(label)
        _, gu_dim, _, gu_roots = GU_TABLE[label.tag]
        dims = g.dims()
        ok = (
            sum(dims) == E8_DIM
            and dims[0] == label.d**2 - 1 + gu_dim
            and len(g.gu_roots()) == gu_roots
            and len(g.sl_roots()) == label.d * (label.d - 1)
        )
        if not ok:
            bad[label.tag] = dims
    return not bad, bad or "sum 248 and degree-0 = sl_d + g_U for all ten labels"


@check("weight_shape_counts")
def _shape_counts() -> CheckResult:
    bad = {}
    for tag in APPENDIX_TAGS:
        for row in appendix_counts(tag):
            got = row.counts + (row.total,)
            want = reference.SHAPE_COUNTS[(row.d, row.n, row.m)]
            if got != want:
                bad[(tag, row.m)] = (got, want)
    ok = not bad and sum(len(appendix_counts(t)) for t in APPENDIX_TAGS) == len(reference.SHAPE_COUNTS)
    return ok, bad or f"{len(reference.SHAPE_COUNTS)} rows match"


@check("orbit_structure")
def _orbits() -> CheckResult:
    bad = {}
    for label in all_labels():
        g = build_grading(label)
        group = gu_generators(label)
        for m in range(1, label.d):
            weights = g.component(m).beta_weights
            expected = 0 if not weights else (2 if (label.tag, m) in {("7", 1), ("7", 6)} else 1)
            got = len(orbit_decompose(weights, group))
            if got != expected:
                bad[(label.tag, m)] = got
    return not bad, bad or "single orbits everywhere except d=7, m=1,6 (two each)"


@check("duality")
def _duality() -> CheckResult:
    bad = []
    for label in all_labels():
        g = build_grading(label)
        for m in range(1, label.d):
            dual = duality_map(g, m)
            back = duality_map(g, label.d - m)
            if any(back[dual[r]] != r for r in dual) or len(set(dual.values())) != len(dual):
                bad.append((label.tag, m, "roots"))
            src = g.component(m).beta_weights
            image = sorted(label.omega - b for b in src)
            if image != list(g.component(label.d - m).beta_weights):
                bad.append((label.tag, m, "weights"))
    return not bad, bad or "beta -> omega - beta is a bijection R^m -> R^(d-m), squaring to identity"


@check("curve_weight_crosscheck")
def _crosscheck() -> CheckResult:
    results = {label.tag: crosscheck_weights(label) for label in all_labels()}
    return all(results.values()), results


@check("ten_and_eleven_dim_identities")
def _identities() -> CheckResult:
    got = {t: build_grading(t).dims() for t in reference.COMPONENT_DIMS}
    return got == reference.COMPONENT_DIMS, got


@check("rank_two_lattice_counts")
def _rank_two() -> CheckResult:
    a = {m: len(curve_classes("8a", m)) for m in range(1, 8)}
    b = {m: len(curve_classes("8b", m)) for m in range(1, 8)}
    ok = (
        sum(a.values()) == 6
        and all(a[m] == 1 for m in (1, 2, 3, 5, 6, 7))
        and a[4] == 0
        and sum(b.values()) == 5
        and (b[2], b[4], b[6]) == (2, 1, 2)
    )
    return ok, {"8a": a, "8b": b}


@check("helix_validation")
def _helix() -> CheckResult:
    dp4 = HelixPeriod.of("4", reference.DP4_HELIX)
    p2 = HelixPeriod.of("9", reference.P2_HELIX)
    q = quiver(dp4)
    layers = q.layers()
    singles = sum(1 for layer in layers[:2] for *_, mult in layer if mult == 1)
    doubles = [mult for *_, mult in layers[2]]
    swapped = list(reference.DP4_HELIX)
    swapped[1], swapped[5] = swapped[5], swapped[1]
    report = validate_helix_period(HelixPeriod.of("4", swapped))
    pair_15 = [f for f in report.failures if (f.i, f.j) == (1, 5)]
    ok = (
        validate_helix_period(dp4).valid
        and validate_helix_period(p2).valid
        and singles == 16
        and all(mult == 1 for layer in layers[:2] for *_, mult in layer)
        and doubles == [2, 2, 2, 2]
        and not report.valid
        and len(pair_15) == 1
        and pair_15[0].m == -1
    )
    return ok, {"single_arrows": singles, "double_arrows": len(doubles), "swap_failures": len(report.failures)}


def _random_vector(rng: random.Random, bound: int = 6) -> LatticeVector:
    return LatticeVector(tuple(rng.randint(-bound, bound) for _ in range(RANK)))


def _random_picard(rng: random.Random, label) -> LatticeVector:
    if label.hyperbolic:
        return from_hyperbolic((rng.randint(-6, 6), rng.randint(-6, 6)))
    k = label.n + 1
    return LatticeVector(tuple(rng.randint(-6, 6) for _ in range(k)) + (0,) * (RANK - k))


def _helix_differences() -> list[tuple[str, LatticeVector]]:
    out = []
    for tag, seq in (("4", reference.DP4_HELIX), ("9", reference.P2_HELIX)):
        out.extend((tag, b - a) for a in seq for b in seq)
    return out


@check("property_suites")
def _properties() -> CheckResult:
    rng = random.Random(FUZZ_SEED)
    roots = [rc.rep for rc in enumerate_root_classes()]
    labels = all_labels()
    failures: dict[str, int] = {}

    def fail(name: str) -> None:
        failures[name] = failures.get(name, 0) + 1

    def chi_properties(label, b: LatticeVector) -> None:
        if euler_characteristic(label, b) + euler_characteristic(label, -b) != 2 + b.norm():
            fail("chi_reciprocity")
        m = inner_product(label.omega, b)
        form = b.norm() == m - 2
        chi = euler_characteristic(label, -b) == 0 and euler_characteristic(label, b) == m
        if form != chi:
            fail("beta_chi_equivalence")

    for _ in range(FUZZ_SAMPLES):
        label = rng.choice(labels)
        chi_properties(label, _random_picard(rng, label))

        u, v = _random_vector(rng), _random_vector(rng)
        alpha = rng.choice(roots)
        ru, rv = reflect(u, alpha), reflect(v, alpha)
        if reflect(ru, alpha) != u or inner_product(ru, rv) != inner_product(u, v):
            fail("reflection")
        if from_hyperbolic(to_hyperbolic(u)) != u:
            fail("hyperbolic_round_trip")

        w = _random_vector(rng)
        b1, g1 = split(label, w)
        if b1 + g1 != w or inner_product(b1, g1) != 0:
            fail("split")

    for tag, diff in _helix_differences():
        chi_properties(get_label(tag), diff)
    for label in labels:
        for alpha in roots:
            b1, g1 = split(label, alpha)
            if b1 + g1 != alpha or inner_product(b1, g1) != 0:
                fail("split")

    weights = {
        "7": OMEGA_3P + OMEGA_4P,
        "8a": 2 * OMEGA_3P + OMEGA_2P,
        "8b": 2 * OMEGA_4P,
        "9": 3 * OMEGA_3P,
    }
    for tag, w in weights.items():
        if get_label(tag).omega != w:
            fail("fundamental_weights")
    for label in labels:
        if (
            label.omega.norm() != label.d
            or inner_product(label.omega, label.delta) != 0
            or label.omega - label.delta != OMEGA0
        ):
            fail("label_invariants")
    return not failures, failures or f"{FUZZ_SAMPLES} fuzzed inputs per property plus reference vectors, zero failures"


def run_all() -> dict[str, CheckResult]:
    return {name: fn() for name, fn in CHECKS.items()}
