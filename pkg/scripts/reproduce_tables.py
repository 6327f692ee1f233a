"""Print the R^m_d dimension grid, the weight-shape table and the orbit sizes."""

from e8grading.grading import build_grading, dims_table
from e8grading.lattice import all_labels
from e8grading.weyl import APPENDIX_TAGS, appendix_counts, gu_generators, orbit_decompose


def main():
    print("dimensions of R^m_d, m = 1..d-1")
    for tag, row in dims_table().items():
        print(f"  d={tag:<3}", " ".join(f"{v:3d}" for v in row))

    print("\nweight shapes: e_i | h-e_J | 2h-e_J | omega-e_i | total")
    cell = lambda v: "  ." if v is None else f"{v:3d}"  # noqa: E731
    for tag in APPENDIX_TAGS:
        for r in appendix_counts(tag):
            print(f"  d={r.d} n={r.n} m={r.m}", " ".join(cell(c) for c in r.counts), f"| {r.total:3d}")

    print("\nWeyl orbit sizes of the degree-m weights")
    for label in all_labels():
        g = build_grading(label)
        group = gu_generators(label)
        sizes = [orbit_decompose(g.component(m).beta_weights, group).sizes for m in range(1, label.d)]
        print(f"  d={label.tag:<3} g_U={g.gu_name or '-':<5}", " ".join(str(list(s)) for s in sizes))


if __name__ == "__main__":
    main()
