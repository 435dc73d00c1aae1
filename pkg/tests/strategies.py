"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from latticeknots.constructions import catalog_entry, catalog_names
from latticeknots.lattice import Transform

transforms = st.builds(
    Transform,
    perm=st.permutations([0, 1, 2]).map(tuple),
    signs=st.tuples(*[st.sampled_from([1, -1])] * 3),
    scale=st.tuples(*[st.integers(1, 3)] * 3),
    shift=st.tuples(*[st.integers(-20, 20)] * 3),
)

isometries = st.builds(
    Transform,
    perm=st.permutations([0, 1, 2]).map(tuple),
    signs=st.tuples(*[st.sampled_from([1, -1])] * 3),
    shift=st.tuples(*[st.integers(-20, 20)] * 3),
)

catalog_conformations = st.sampled_from(catalog_names()).map(lambda n: catalog_entry(n).conformation)
knot_names = [n for n in catalog_names() if "^" not in n]
catalog_knots = st.sampled_from(knot_names).map(lambda n: catalog_entry(n).conformation)
