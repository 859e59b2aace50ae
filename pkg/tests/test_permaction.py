import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagprod.errors import OrbitCapExceeded
from flagprod.permaction import (
    GroupElement,
    Permutation,
    Point,
    apply,
    compose,
    element_point_map,
    flag_orbit_size,
    full_wreath_generators,
    identity_element,
    inverse,
    orbit_of_block,
    point_at,
    point_index,
    wreath_group_order,
)


def elements(omega):
    perm = st.permutations(range(omega)).map(lambda im: Permutation(tuple(im)))
    return st.builds(GroupElement, perm, perm, st.sampled_from((0, 1)))


def test_point_index_round_trip():
    for omega in (2, 3, 5):
        for i in range(omega * omega):
            assert point_index(point_at(i, omega), omega) == i


def test_permutation_validates():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((1, 2, 3))


def test_apply_spec_cases():
    g = Permutation.from_cycles(5, [(0, 1, 2)])
    h = Permutation.identity(5)
    assert apply(GroupElement(g, h, 0), Point(0, 3)) == Point(1, 3)
    assert apply(GroupElement(g, h, 1), Point(0, 3)) == Point(3, 1)
    t = Permutation.from_cycles(2, [(0, 1)])
    assert apply(GroupElement(t, t, 1), Point(0, 1)) == Point(0, 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 9).flatmap(lambda w: st.tuples(elements(w), elements(w))))
def test_compose_is_left_to_right(xy):
    x, y = xy
    omega = x.omega
    xy_el = compose(x, y)
    for i in range(omega * omega):
        p = point_at(i, omega)
        assert apply(xy_el, p) == apply(y, apply(x, p))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8).flatmap(elements))
def test_inverse_round_trip(x):
    ident = identity_element(x.omega)
    assert compose(x, inverse(x)) == ident
    assert compose(inverse(x), x) == ident


def test_two_swaps_cancel():
    x = GroupElement(Permutation.identity(4), Permutation.identity(4), 1)
    assert compose(x, x).eps == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(elements))
def test_point_map_matches_apply(x):
    omega = x.omega
    table = element_point_map(x)
    for i in range(omega * omega):
        assert table[i] == point_index(apply(x, point_at(i, omega)), omega)


def test_wreath_group_order():
    assert wreath_group_order(1) == 2
    assert wreath_group_order(5) == 28800
    assert wreath_group_order(9) == 263363788800


def test_generator_count():
    gens = full_wreath_generators(5)
    assert len(gens) == 5
    assert sum(g.eps for g in gens) == 1


def test_singleton_orbit_under_identity():
    orbit = orbit_of_block([identity_element(5)], (0, 5, 11, 16))
    assert orbit.shape == (1, 4)
    assert list(orbit[0]) == [0, 5, 11, 16]


def test_orbit_125(design_125):
    # 600 = 2 * (C(5,2) * C(3,2) * 5 * 4) / 2!, both grid orientations
    assert design_125.b == 600
    rows = design_125.blocks
    assert (np.diff(rows, axis=1) > 0).all()
    order = np.lexsort(rows.T[::-1])
    assert (order == np.arange(len(rows))).all()


def test_orbit_determinism_under_generator_order():
    gens = full_wreath_generators(5)
    seed = (0, 5, 11, 16)
    a = orbit_of_block(gens, seed)
    b = orbit_of_block(gens[::-1], seed)
    assert (a == b).all()


def test_orbit_cap():
    with pytest.raises(OrbitCapExceeded):
        orbit_of_block(full_wreath_generators(5), (0, 5, 11, 16), cap=10)


def test_flag_orbit_125():
    gens = full_wreath_generators(5)
    assert flag_orbit_size(gens, 0, (0, 5, 11, 16)) == 2400


def test_flag_requires_incidence():
    with pytest.raises(ValueError):
        flag_orbit_size(full_wreath_generators(5), 1, (0, 5, 11, 16))


def test_flag_point_kept_distinct():
    # flag rows sort only the block part, the marked point must not migrate
    gens = full_wreath_generators(3)
    n = flag_orbit_size(gens, 0, (0, 4, 8))
    # the diagonal's block orbit is the 6 permutation graphs on a 3x3 grid,
    # each carrying 3 incident points
    assert n == 18
