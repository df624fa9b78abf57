import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from surfclass.classify import torus_solution
from surfclass.curveword import CurveWord, is_normal, parse_word
from surfclass.errors import SurfaceError
from surfclass.normal import (
    coordinates_of,
    enumerate_admissible,
    is_admissible,
    matching_system,
    trace,
)
from surfclass.oracle import genus_g, refine

from oracles import brute_force, triplewise

# the torus corner labels x1..x6 of the hand computation are x00, x10, x01, x11, x02, x12
HAND_LABEL = {1: 0, 2: 3, 3: 1, 4: 4, 5: 2, 6: 5}


def test_torus_matching_system_matches_hand_equations(torus):
    system = matching_system(torus)
    assert len(system) == 3
    expected = {
        ((1, 3), (2, 4)),
        ((1, 5), (2, 6)),
        ((3, 5), (4, 6)),
    }
    expected = {
        frozenset((frozenset(HAND_LABEL[v] for v in lhs), frozenset(HAND_LABEL[v] for v in rhs)))
        for lhs, rhs in expected
    }
    got = {frozenset((frozenset((i, j)), frozenset((k, l)))) for i, j, k, l in system.equations}
    assert got == expected


def test_torus_solutions_are_paired_triples(torus):
    for x in enumerate_admissible(torus, 3):
        hand = [x[HAND_LABEL[i]] for i in range(1, 7)]
        assert hand[0] == hand[1] and hand[2] == hand[3] and hand[4] == hand[5]
    assert len(enumerate_admissible(torus, 3)) == 4 ** 3


def test_matching_lines(torus):
    assert matching_system(torus).lines()[0] == "x0 + x1 = x3 + x4"


def test_sphere_has_three_equations_and_zero_solution(sphere):
    assert len(matching_system(sphere)) == 3
    assert is_admissible(sphere, (0,) * 6)


def test_admissibility_examples(torus):
    assert is_admissible(torus, (1, 0, 0, 1, 0, 0))
    assert not is_admissible(torus, (1, 0, 0, 0, 0, 0))
    with pytest.raises(SurfaceError):
        is_admissible(torus, (1, 0, 0))


def test_negative_entries_are_inadmissible(torus):
    assert not is_admissible(torus, (-1, 0, 0, -1, 0, 0))


def test_torus_enumeration_max_one(torus):
    sols = enumerate_admissible(torus, 1)
    assert len(sols) == 8
    assert sols == sorted(sols)
    assert sols[0] == (0,) * 6


@pytest.mark.parametrize("g", [0, 1, 2])
def test_max_coord_zero_gives_zero_vector(g):
    T = genus_g(g)
    assert enumerate_admissible(T, 0) == [(0,) * (3 * T.n)]


@pytest.mark.parametrize("max_coord", [1, 2])
def test_enumeration_matches_brute_force(torus, sphere, max_coord):
    for T in (torus, sphere):
        assert enumerate_admissible(T, max_coord) == brute_force(T, max_coord)


def test_enumeration_matches_triplewise_search_on_refined_torus(torus):
    T = refine(torus, 2, 11)
    assert enumerate_admissible(T, 1) == triplewise(T, 1)


def test_vertex_link_traces_to_one_component(torus):
    curves = trace(torus, (1,) * 6)
    assert len(curves) == 1
    assert curves.components[0].coords == (1,) * 6
    assert len(curves.components[0].word.components[0].crossings) == 6


def test_parallel_copies_trace_separately(torus):
    curves = trace(torus, torus_solution(2, 0, 0))
    assert len(curves) == 2
    assert all(c.coords == (1, 0, 0, 1, 0, 0) for c in curves.components)


def test_zero_vector_has_no_components(genus2):
    assert len(trace(genus2, (0,) * (3 * genus2.n))) == 0


def test_trace_rejects_inadmissible(torus):
    with pytest.raises(SurfaceError, match="matching system violated"):
        trace(torus, (1, 0, 0, 0, 0, 0))


def test_coordinates_of_vertex_link(torus):
    w = trace(torus, (1,) * 6).combined_word()
    assert coordinates_of(torus, w) == (1,) * 6


def test_coordinates_of_empty_word(torus):
    assert coordinates_of(torus, CurveWord()) == (0,) * 6


def test_coordinates_of_requires_normal(torus):
    with pytest.raises(SurfaceError, match="normalize first"):
        coordinates_of(torus, parse_word("@0"))


@pytest.mark.parametrize("m, l", list(itertools.product(range(1, 5), repeat=2)))
def test_torus_component_count_is_gcd(torus, m, l):
    assert len(trace(torus, torus_solution(m, l, 0))) == math.gcd(m, l)


def test_crossing_counts_agree_across_each_edge(genus2):
    for x in enumerate_admissible(genus2, 1)[::37]:
        for a, b in genus2.gluings:
            ma = x[3 * a.t + a.s] + x[3 * a.t + (a.s + 1) % 3]
            mb = x[3 * b.t + b.s] + x[3 * b.t + (b.s + 1) % 3]
            assert ma == mb


def test_components_are_admissible_and_sum_to_input(genus2):
    for x in enumerate_admissible(genus2, 2)[::997]:
        curves = trace(genus2, x)
        total = [0] * len(x)
        for comp in curves.components:
            assert is_admissible(genus2, comp.coords)
            assert is_normal(genus2, comp.word)
            assert coordinates_of(genus2, comp.word) == comp.coords
            total = [u + v for u, v in zip(total, comp.coords)]
        assert tuple(total) == x


def test_component_order_is_canonical(torus):
    # components are listed by the smallest edge/position they cross
    curves = trace(torus, torus_solution(1, 1, 0))
    assert len(curves) == 1
    first = curves.components[0].word.components[0].crossings[0]
    assert first.t == 0 and first.s == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_torus_round_trip_property(m, l, k):
    from surfclass.oracle import canonical_torus

    T = canonical_torus()
    x = torus_solution(m, l, k)
    assert coordinates_of(T, trace(T, x).combined_word()) == x
