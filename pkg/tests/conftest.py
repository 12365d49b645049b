from fractions import Fraction as Q

import pytest
from hypothesis import strategies as st

from hhcert import pwfun
from hhcert.functional import from_alpha, make, reference


@pytest.fixture
def mid():
    return reference("midpoint")


@pytest.fixture
def trap():
    return reference("trapezoid")


@pytest.fixture
def mean():
    return reference("integral_mean")


@pytest.fixture
def three_point():
    return make(F_terms=[(0, -3), (Q(1, 2), 4), (1, -1)])


@pytest.fixture
def skewed():
    return make(F_terms=[(Q(1, 4), -3), (Q(9, 20), Q(25, 11)), (1, Q(8, 11))])


@pytest.fixture
def central4():
    return make(F_terms=[(0, Q(1, 3)), (Q(1, 4), Q(-8, 3)), (Q(3, 4), Q(8, 3)), (1, Q(-1, 3))])


@pytest.fixture
def thirds_wide():
    return from_alpha([-2, 3, -3, 2], [1, Q(2, 3), Q(1, 3), 0])


@pytest.fixture
def quarters_sym():
    return make(F_terms=[(0, 2), (Q(1, 4), -3), (Q(3, 4), 3), (1, -2)])


small = st.fractions(min_value=-4, max_value=4, max_denominator=12)
unit = st.integers(0, 24).map(lambda k: Q(k, 24))


@st.composite
def pwfuns(draw, max_pieces=5):
    inner = draw(st.lists(st.integers(1, 23), max_size=max_pieces - 1, unique=True))
    breaks = [Q(0)] + sorted(Q(k, 24) for k in inner)
    pieces = [(b, draw(small), draw(small)) for b in breaks]
    final = draw(st.one_of(st.none(), small))
    return pwfun.build(pieces, final)


@st.composite
def functionals(draw, max_nodes=5, atoms=True):
    n = draw(st.integers(2, max_nodes))
    nodes = draw(st.lists(unit, min_size=n, max_size=n, unique=True))
    coefs = [draw(small) for _ in nodes[:-1]]
    coefs.append(-sum(coefs, Q(0)))
    f_atoms = []
    if atoms:
        f_atoms = draw(st.lists(st.tuples(unit, small), max_size=2))
    return make(f_atoms, list(zip(nodes, coefs)))
