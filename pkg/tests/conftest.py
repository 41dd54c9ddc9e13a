import sys
from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import settings

from conicring import BrauerClass, Place, RingElement, Subgroup, Term, new_conic, span

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("thorough", max_examples=300)
settings.register_profile("fast", max_examples=25)

PLACE_POOL = [Place.finite(2), Place.finite(3), Place.finite(5), Place.finite(7), Place.real()]

nonzero_ints = st.integers(-60, 60).filter(bool)

nonzero_rationals = st.builds(
    Fraction, nonzero_ints, st.integers(1, 60)
)

small_rationals = st.builds(
    Fraction, st.integers(-9, 9), st.integers(1, 9)
)

conics = st.builds(new_conic, nonzero_rationals, nonzero_rationals)


@st.composite
def brauer_classes(draw, pool=None):
    pool = pool or PLACE_POOL
    size = draw(st.sampled_from([0, 2, 4][: (len(pool) // 2) + 1]))
    places = draw(st.permutations(pool))[:size]
    return BrauerClass(places)


@st.composite
def subgroups(draw) -> Subgroup:
    gens = draw(st.lists(brauer_classes(), max_size=3))
    return span(gens)


@st.composite
def ring_elements(draw, max_terms=3) -> RingElement:
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        group = draw(subgroups())
        power = draw(st.integers(0, 3))
        coeff = draw(st.integers(-3, 3).filter(bool))
        terms[Term(group, power)] = coeff
    return RingElement(terms)
