import pytest

from e8grading.grading import build_grading, dims_table
from e8grading.lattice import LABEL_TAGS, all_labels, e, get_label, inner_product, reflect, vec
from e8grading.reference import R_DIMS, SHAPE_COUNTS
from e8grading.weyl import APPENDIX_TAGS, appendix_counts, gu_generators, orbit, orbit_decompose


def test_generators():
    g3 = gu_generators("3")
    assert len(g3.generators) == 6
    assert g3.generators[-1] == vec(1, e1=-1, e2=-1, e3=-1)
    assert gu_generators("8b").generators == (vec(1, e1=-1) - vec(1, e2=-1),)
    assert gu_generators("9").generators == ()
    assert gu_generators("8a").generators == ()
    assert gu_generators("7").generators == (e(1) - e(2),)


@pytest.mark.parametrize("label", all_labels(), ids=LABEL_TAGS)
def test_generators_fix_omega(label):
    for g in gu_generators(label).generators:
        assert g.norm() == -2
        assert inner_product(g, label.omega) == 0
        assert reflect(label.omega, g) == label.omega


def test_orbit_examples():
    assert len(orbit(e(1), gu_generators("4"))) == 16
    assert orbit(e(1), gu_generators("7")) == (e(2), e(1))
    w3 = get_label("3").omega
    assert orbit(w3, gu_generators("3")) == (w3,)


def test_orbit_of_e1_on_dp1_is_240_lines():
    assert len(orbit(e(1), gu_generators("1"))) == 240


def test_orbit_decompose_examples():
    g5 = build_grading("5")
    dec = orbit_decompose(g5.component(2).beta_weights, gu_generators("5"))
    assert dec.sizes == (5,)
    g7 = build_grading("7")
    for m in (1, 6):
        dec = orbit_decompose(g7.component(m).beta_weights, gu_generators("7"))
        assert dec.sizes == (2, 1)


def test_orbit_decompose_rejects_open_set():
    with pytest.raises(ValueError):
        orbit_decompose([e(1)], gu_generators("4"))


@pytest.mark.parametrize("label", all_labels(), ids=LABEL_TAGS)
def test_single_orbits(label):
    g = build_grading(label)
    group = gu_generators(label)
    for m in range(1, label.d):
        weights = g.component(m).beta_weights
        dec = orbit_decompose(weights, group)
        if not weights:
            assert len(dec) == 0
        elif label.tag == "7" and m in (1, 6):
            assert len(dec) == 2
        else:
            assert len(dec) == 1


def test_shape_table_rows():
    rows = {(r.d, r.m): r for t in APPENDIX_TAGS for r in appendix_counts(t)}
    assert rows[(2, 1)].counts == (7, 21, 21, 7) and rows[(2, 1)].total == 56
    assert rows[(5, 3)].counts == (None, 1, 4, None) and rows[(5, 3)].total == 5
    assert rows[(8, 4)].counts == (None,) * 4 and rows[(8, 4)].total == 0


def test_shape_table_full_table():
    got = {(r.d, r.n, r.m): r.counts + (r.total,) for t in APPENDIX_TAGS for r in appendix_counts(t)}
    assert got == SHAPE_COUNTS


def test_shape_table_totals_match_dims():
    table = dims_table()
    for t in APPENDIX_TAGS:
        assert tuple(r.total for r in appendix_counts(t)) == table[t] == R_DIMS[t]


@pytest.mark.parametrize("tag", ["8b", "9", "1"])
def test_shape_table_rejects(tag):
    with pytest.raises(ValueError):
        appendix_counts(tag)


@pytest.mark.parametrize("tag", APPENDIX_TAGS)
def test_symmetric_group_refines_shapes(tag):
    """Without the extra reflection, orbits are exactly the nonzero shape classes."""
    g = build_grading(tag)
    sn = gu_generators(tag, extra=False)
    for row in appendix_counts(tag):
        dec = orbit_decompose(g.component(row.m).beta_weights, sn)
        assert sorted(dec.sizes) == sorted(c for c in row.counts if c)
