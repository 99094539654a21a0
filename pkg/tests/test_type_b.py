"""Type B: B-arcs, forcing, ideals, congruences, shard polytopes and quotientopes."""

import itertools
from math import comb

import pytest

from shardpoly.polytope_core import FanFrame, facet_directions, summand_space_dim
from shardpoly.type_b import (
    OVERLAPPED,
    SEPARATED,
    SINGULAR,
    BArc,
    BArcIdeal,
    NotSymmetrizable,
    SignedArc,
    SignedPermutation,
    b_close_upward,
    b_congruence_classes,
    b_descents,
    b_diagram_to_perm,
    b_dimension,
    b_forces,
    b_ideal_masks,
    b_perm_to_diagram,
    b_quotient_degrees,
    b_quotientope,
    b_ray_check_agrees,
    b_shard_contains,
    b_shard_polytope,
    b_shard_support,
    barc_to_join_irreducible,
    barc_to_dict,
    cambrian_b_ideal,
    enumerate_b_arcs,
    enumerate_b_ideals,
    expected_dimension,
    full_b_ideal,
    is_symmetrized,
    new_arc_counts,
    parse_barc,
    signed_perms,
    symmetrize_ideal,
    symmetrized_count,
    verify_cor131,
    verify_cor131_all,
    verify_prop130,
)
from shardpoly.weak_order_a import ArcIdeal, enumerate_arc_ideals


def brute_b_ideals(n):
    """Oracle: subsets of B-arcs closed under being forced, by exhaustion."""
    arcs = enumerate_b_arcs(n)
    out = set()
    for r in range(len(arcs) + 1):
        for S in itertools.combinations(arcs, r):
            S = set(S)
            if all(g in S for s in S for g in arcs if b_forces(g, s)):
                out.add(frozenset(S))
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_barc_count(n):
    assert len(enumerate_b_arcs(n)) == 3**n - n - 1


def test_barc_classes():
    cls = {str(b): b.cls for b in enumerate_b_arcs(2)}
    assert cls == {
        "-2-2|A=-1|B=1": SINGULAR,
        "-2-2|A=1|B=-1": SINGULAR,
        "-1-1|A=|B=": SINGULAR,
        "-1-2|A=|B=1": OVERLAPPED,
        "-1-2|A=1|B=": OVERLAPPED,
        "1-2|A=|B=": SEPARATED,
    }
    assert new_arc_counts(3) == {SEPARATED: 3, SINGULAR: 4, OVERLAPPED: 10}


def test_non_symmetrizable():
    # Both interior points on one side: the arc and its mirror image cross.
    with pytest.raises(NotSymmetrizable):
        parse_barc("-2-2|A=-1,1|B=", 2)


def test_parse_either_arc_of_pair():
    assert parse_barc("-2-1|A=|B=-1", 2) == parse_barc("-1-2|A=1|B=", 2)
    d = barc_to_dict(parse_barc("-1-2|A=1|B=", 2))
    assert d["class"] == OVERLAPPED and "upper_is_rep" in d


def test_forcing_reflexive_and_antisymmetric():
    arcs = enumerate_b_arcs(3)
    assert all(b_forces(b, b) for b in arcs)
    for x, y in itertools.permutations(arcs, 2):
        assert not (b_forces(x, y) and b_forces(y, x))


def test_separated_forcing_is_type_a():
    sep = parse_barc("1-3|A=2|B=", 3)
    sub = parse_barc("2-3|A=|B=", 3)
    assert b_forces(sub, sep)
    assert not b_forces(sep, sub)


def test_ideal_counts():
    assert len(brute_b_ideals(2)) == 19
    assert {I for I in (frozenset(J.barcs) for J in enumerate_b_ideals(2))} == brute_b_ideals(2)
    assert len(b_ideal_masks(3)) == 8368


def test_symmetrized_counts():
    found = {frozenset(symmetrize_ideal(I, 2).barcs) for I in enumerate_arc_ideals(4)}
    assert len(found) == 12
    assert symmetrized_count(2) == 12
    assert {frozenset(I.barcs) for I in enumerate_b_ideals(2) if is_symmetrized(I)} == found
    assert symmetrized_count(3) == 1370


def test_closure():
    beta = parse_barc("-2-2|A=-1|B=1", 2)
    I = b_close_upward([beta], 2)
    assert I.is_closed() and beta in I
    assert len(full_b_ideal(3)) == 3**3 - 3 - 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagram_roundtrip(n):
    for sigma in signed_perms(n):
        for color in ("down", "up"):
            assert b_diagram_to_perm(b_perm_to_diagram(sigma, color), n, color) == sigma
        assert len(b_perm_to_diagram(sigma)) == len(b_descents(sigma))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_join_irreducibles(n):
    seen = set()
    for beta in enumerate_b_arcs(n):
        sigma = barc_to_join_irreducible(beta)
        assert len(b_descents(sigma)) == 1
        assert b_perm_to_diagram(sigma) == {beta}
        seen.add(sigma)
    assert len(seen) == 3**n - n - 1


def test_join_irreducible_n1():
    assert barc_to_join_irreducible(parse_barc("-1-1|A=|B=", 1)) == SignedPermutation((-1,))


@pytest.mark.parametrize("n", [2, 3])
def test_extreme_congruences(n):
    size = 2**n * len(FanFrame("A", n).chambers)
    assert len(b_congruence_classes(full_b_ideal(n)).classes) == size
    assert len(b_congruence_classes(BArcIdeal(frozenset(), n)).classes) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_cambrian_counts(n):
    for beta in enumerate_b_arcs(n):
        if beta.cls == SINGULAR and beta.rep.b == n:
            part = b_congruence_classes(cambrian_b_ideal(beta))
            assert len(part.classes) == comb(2 * n, n)
            degrees = b_quotient_degrees(part)
            assert all(d == n for d in degrees)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_shard_dimensions(n):
    for beta in enumerate_b_arcs(n):
        assert b_dimension(beta) == expected_dimension(beta)
        assert b_shard_contains(beta, (0,) * n)


def test_separated_shard_polytope_is_type_a():
    assert len(b_shard_polytope(parse_barc("1-2|A=|B=", 2)).vertices) == 2
    assert len(b_shard_polytope(parse_barc("-1-2|A=|B=1", 2)).vertices) == 3


def test_singular_shards_cover_hyperplane():
    n = 2
    sing = [b for b in enumerate_b_arcs(n) if b.cls == SINGULAR and b.rep.b == 1]
    for x2 in range(-3, 4):
        assert any(b_shard_contains(b, (0, x2)) for b in sing)


@pytest.mark.parametrize("n", [1, 2])
def test_walls(n):
    for beta in enumerate_b_arcs(n):
        assert verify_prop130(beta).ok


@pytest.mark.parametrize("n", [1, 2])
def test_indecomposable(n):
    for beta in enumerate_b_arcs(n):
        assert summand_space_dim(b_shard_support(beta)) == 1


def test_quotient_fans_n2():
    for I in enumerate_b_ideals(2):
        assert verify_cor131(I)
        assert b_ray_check_agrees(I)
    assert verify_cor131_all(2) == (19, [])


def test_full_quotientope():
    s = b_quotientope(full_b_ideal(2))
    assert len(facet_directions(s)) == 3**2 - 1
    w = {b: k + 1 for k, b in enumerate(enumerate_b_arcs(2))}
    assert verify_cor131(full_b_ideal(2), w)


def test_symmetrize_empty_and_pairs():
    I = ArcIdeal(frozenset(), 4)
    assert len(symmetrize_ideal(I, 2)) == 0
    assert SignedArc(1, 2, (), (), 2) != SignedArc(-2, -1, (), (), 2)
    assert BArc.of(SignedArc(-2, -1, (), (), 2)) == BArc(SignedArc(1, 2, (), (), 2))
