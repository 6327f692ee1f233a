from hypothesis import settings, strategies as st

from e8grading.lattice import LABEL_TAGS, LatticeVector, from_hyperbolic, get_label

settings.register_profile("fuzz", max_examples=1000, deadline=None)

coeff = st.integers(min_value=-6, max_value=6)
vectors = st.lists(coeff, min_size=10, max_size=10).map(LatticeVector.of)
labels = st.sampled_from(LABEL_TAGS).map(get_label)


@st.composite
def picard_classes(draw, label=None):
    label = label or draw(labels)
    if label.hyperbolic:
        return label, from_hyperbolic((draw(coeff), draw(coeff)))
    k = label.n + 1
    head = draw(st.lists(coeff, min_size=k, max_size=k))
    return label, LatticeVector.of(head + [0] * (10 - k))
