"""Quotientopes of arc ideals: vertices, heights, fans, rays and reference associahedra."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shardpoly.polytope_core import (
    FanFrame,
    chamber_partition,
    facets_bruteforce,
    mask_of,
    members,
    vertices_from_support,
)
from shardpoly.quotientopes_a import (
    Gamma,
    Gamma_cases,
    NonpositiveWeight,
    NotForcingDominant,
    class_vertices,
    default_f,
    fan_of_ideal,
    full_ideal_height,
    full_ideal_vertex,
    h_of,
    heights_support,
    hl,
    hl_shift,
    loday,
    loday_facet_rhs,
    ps_quotientope,
    quotientope,
    ray_check_agrees,
    v_of,
    validate_forcing_dominant,
    verify_cor50,
    verify_prop100,
    verify_ps_fan,
    verify_symmetry,
    verify_thm1,
    verify_vertices,
)
from shardpoly.shards_a import shard_polytope
from shardpoly.weak_order_a import (
    ArcIdeal,
    cambrian_ideal,
    congruence_classes,
    enumerate_arc_ideals,
    enumerate_arcs,
    full_ideal,
    sylvester_ideal,
)


def argmax(points, t):
    """Oracle: the unique maximiser of a generic direction by direct scan."""
    best = max(sum(a * b for a, b in zip(p, t)) for p in points)
    winners = [p for p in points if sum(a * b for a, b in zip(p, t)) == best]
    assert len(winners) == 1
    return tuple(int(x) for x in winners[0])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vertex_formula_matches_scan(n):
    for alpha in enumerate_arcs(n):
        pts = shard_polytope(alpha).vertices
        for t in itertools.permutations(range(1, n + 1)):
            assert v_of(t, alpha) == argmax(pts, t)


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 7)), st.integers(0, 56))
def test_vertex_formula_random_n6(t, k):
    alpha = enumerate_arcs(6)[k]
    assert v_of(tuple(t), alpha) == argmax(shard_polytope(alpha).vertices, t)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_height_formula_matches_scan(n):
    for alpha in enumerate_arcs(n):
        pts = shard_polytope(alpha).vertices
        for mask in range(1, 1 << n):
            R = members(mask)
            assert h_of(R, alpha) == max(sum(p[i - 1] for i in R) for p in pts)


def test_heights_support_equals_sum():
    for I in list(enumerate_arc_ideals(4))[::5]:
        assert heights_support(I) == quotientope(I)
    w = {a: Fraction(k + 1, 3) for k, a in enumerate(sylvester_ideal(4))}
    assert heights_support(sylvester_ideal(4), w) == quotientope(sylvester_ideal(4), w)


def test_weights_positive():
    I = sylvester_ideal(3)
    with pytest.raises(NonpositiveWeight):
        quotientope(I, {next(iter(I)): 0})


@pytest.mark.parametrize("n", [3, 4])
def test_quotient_fan_every_ideal(n):
    for I in enumerate_arc_ideals(n):
        assert verify_cor50(I)


def test_quotient_fan_examples():
    assert len(vertices_from_support(quotientope(sylvester_ideal(4)))) == 14
    assert len(vertices_from_support(quotientope(full_ideal(4)))) == 24
    assert len(vertices_from_support(quotientope(ArcIdeal(frozenset(), 4)))) == 1
    for I in list(enumerate_arc_ideals(5))[::97]:
        assert verify_cor50(I)


def test_class_vertices():
    for I in enumerate_arc_ideals(4):
        assert verify_vertices(I)
    cv = class_vertices(sylvester_ideal(4))
    assert len(set(cv.values())) == 14


@pytest.mark.parametrize("n", [3, 4])
def test_ray_criterion(n):
    for I in enumerate_arc_ideals(n):
        assert ray_check_agrees(I)


def test_full_ideal_closed_forms():
    n = 4
    frame = FanFrame("A", n)
    s = quotientope(full_ideal(n))
    P = vertices_from_support(s)
    for t in itertools.permutations(range(1, n + 1)):
        assert full_ideal_vertex(t) == argmax(P.vertices, t)
    for U in frame.keys:
        assert full_ideal_height(members(U), n) == s[U]


@pytest.mark.parametrize("n", range(2, 7))
def test_loday_is_translated_sylvester_quotientope(n):
    P = vertices_from_support(quotientope(sylvester_ideal(n)))
    shift = tuple(range(1, n + 1))
    assert set(loday(n).vertices) == set(P.translate(shift).vertices)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_loday_facets(n):
    V = loday(n).vertices
    for i, j in itertools.combinations_with_replacement(range(1, n + 1), 2):
        if (i, j) == (1, n):
            continue
        low = min(sum(v[k - 1] for k in range(i, j + 1)) for v in V)
        assert low == loday_facet_rhs(i, j)
    assert len(facets_bruteforce(V)) == n * (n + 1) // 2 - 1


@pytest.mark.parametrize("alpha", enumerate_arcs(4), ids=str)
def test_cambrian_associahedra(alpha):
    P = vertices_from_support(quotientope(cambrian_ideal(alpha))).translate(hl_shift(alpha))
    assert set(P.vertices) == set(hl(alpha).vertices)


def test_cambrian_vertex_count():
    for alpha in enumerate_arcs(5):
        if alpha.a == 1 and alpha.b == 5:
            assert len(hl(alpha).vertices) == 42


@pytest.mark.parametrize("n", [3, 4])
def test_sum_of_cambrian(n):
    for I in enumerate_arc_ideals(n):
        assert verify_thm1(I)


def test_symmetries():
    seen = 0
    for I in enumerate_arc_ideals(4):
        for which in ("phi", "psi"):
            r = verify_symmetry(I, which)
            if r is not None:
                assert r
                seen += 1
    assert seen > 2


def test_forcing_dominance():
    for n in (3, 4, 5):
        assert validate_forcing_dominant(default_f(n), n)
    assert not validate_forcing_dominant(lambda S: 1, 4)
    with pytest.raises(NotForcingDominant):
        ps_quotientope(sylvester_ideal(4), lambda S: 1)


def test_gamma_cases():
    n = 5
    from shardpoly.basis_conversions import canonical_keys

    for S, I in itertools.product(canonical_keys(n), repeat=2):
        assert Gamma(S, I, n) == Gamma_cases(S, I, n)


@pytest.mark.parametrize("n", [3, 4])
def test_ps_quotientopes(n):
    for I in enumerate_arc_ideals(n):
        assert verify_ps_fan(I)
        assert verify_prop100(I)


def test_ps_other_dominant_function():
    rng = random.Random(7)
    n = 4
    base = default_f(n)
    from shardpoly.basis_conversions import canonical_keys

    bump = {S: 1 + Fraction(rng.randint(0, 3), 10) for S in canonical_keys(n)}
    f = lambda S: base(S) * bump[tuple(S)]
    assert validate_forcing_dominant(f, n)
    for I in list(enumerate_arc_ideals(n))[::4]:
        assert verify_ps_fan(I, f)


def test_fan_is_partition_of_classes():
    I = sylvester_ideal(4)
    assert fan_of_ideal(I) == chamber_partition(quotientope(I))
    assert len(congruence_classes(I).classes) == len(fan_of_ideal(I).blocks)
    assert mask_of([1, 2]) in FanFrame("A", 3).keys
