"""Support vectors, vertex recovery, chamber partitions, summands and volumes."""

import itertools
from fractions import Fraction

import pytest

from shardpoly.polytope_core import (
    FanFrame,
    NegativeScale,
    NotAnEdge,
    NotTight,
    SupportVector,
    VPolytope,
    affine_dim,
    caged_translate,
    chamber_partition,
    coarsens,
    extreme_points,
    facet_directions,
    facets_bruteforce,
    is_deformed_permutahedron,
    is_indecomposable,
    is_tight,
    mask_of,
    members,
    mcmullen_check,
    minkowski_sum,
    mixed_volume_oracle,
    permutahedron_support,
    point_support,
    polytope_from_json,
    polytope_support,
    polytope_to_json,
    scale,
    summand_space_dim,
    support_from_vertices,
    vertices_from_support,
    volume,
)
from shardpoly.quotientopes_a import quotientope
from shardpoly.shards_a import shard_polytope, shard_support
from shardpoly.weak_order_a import cambrian_ideal, enumerate_arcs, parse_arc


def frame(n):
    return FanFrame("A", n)


def e(i, n):
    return tuple(int(k == i) for k in range(1, n + 1))


def brute_max(points, U):
    """Oracle: direct maximum of the coordinate sum over ``U``."""
    return max(sum(p[i - 1] for i in U) for p in points)


def test_frame_sizes():
    assert len(frame(4).chambers) == 24
    assert len(frame(4).keys) == 15
    assert len(FanFrame("B", 3).chambers) == 48
    assert len(FanFrame("B", 3).keys) == 26


def test_point_support_is_zero():
    s = point_support((0, 0, 0), frame(3))
    assert all(v == 0 for _, v in s.values)
    assert vertices_from_support(s).vertices == ((0, 0, 0),)


def test_segment_support():
    s = support_from_vertices([(0, 0), (1, -1)], frame(2))
    assert s[mask_of([1])] == 1
    assert s[mask_of([2])] == 0
    assert s[mask_of([1, 2])] == 0


def test_simplex_support():
    pts = [e(1, 3), e(2, 3), e(3, 3)]
    s = support_from_vertices(pts, frame(3))
    assert all(v == 1 for _, v in s.values)


def test_permutahedron_roundtrip():
    s = permutahedron_support(frame(3))
    assert s[mask_of([2, 3])] == 5
    V = vertices_from_support(s)
    assert set(V.vertices) == set(itertools.permutations((1, 2, 3)))


def test_support_matches_brute_force():
    for alpha in enumerate_arcs(4):
        pts = shard_polytope(alpha).vertices
        s = shard_support(alpha)
        for U in frame(4).keys:
            assert s[U] == brute_max(pts, members(U))


def test_tightness_and_submodularity():
    assert is_deformed_permutahedron(permutahedron_support(frame(4)))
    for alpha in enumerate_arcs(5):
        assert is_deformed_permutahedron(shard_support(alpha))
    d = permutahedron_support(frame(3)).as_dict()
    d[mask_of([1])] += 5
    bad = SupportVector.from_dict(frame(3), d)
    assert not is_deformed_permutahedron(bad)
    assert not is_tight(bad)
    with pytest.raises(NotTight):
        vertices_from_support(bad)


def test_minkowski_sum_examples():
    P = support_from_vertices([(0, 0, 0), (1, -1, 0)], frame(3))
    Q = support_from_vertices([(0, 0, 0), (0, 1, -1)], frame(3))
    Z = point_support((0, 0, 0), frame(3))
    assert minkowski_sum(P, Z) == P
    assert len(vertices_from_support(P + Q)) == 4


def test_sum_refines_partitions():
    alphas = enumerate_arcs(4)
    for a, b in itertools.combinations(alphas, 2):
        P, Q = shard_support(a), shard_support(b)
        total = chamber_partition(P + Q)
        assert coarsens(chamber_partition(P), total)
        assert coarsens(chamber_partition(Q), total)
        where = lambda part: {c: k for k, blk in enumerate(part.blocks) for c in blk}
        wp, wq, wt = where(chamber_partition(P)), where(chamber_partition(Q)), where(total)
        chambers = frame(4).chambers
        for c, d in itertools.combinations(chambers, 2):
            assert (wt[c] == wt[d]) == (wp[c] == wp[d] and wq[c] == wq[d])


def test_scale_rejects_negative():
    with pytest.raises(NegativeScale):
        scale(permutahedron_support(frame(3)), -1)
    assert scale(permutahedron_support(frame(3)), 2)[mask_of([3])] == 6


def test_partition_examples():
    assert len(chamber_partition(point_support((0, 0, 0), frame(3))).blocks) == 1
    assert len(chamber_partition(permutahedron_support(frame(4))).blocks) == 24
    assert len(chamber_partition(shard_support(parse_arc("1-3|A=2|B=", 3))).blocks) == 3


def test_coarsening_examples():
    perm = chamber_partition(permutahedron_support(frame(3)))
    tri = chamber_partition(shard_support(parse_arc("1-3|A=2|B=", 3)))
    assert coarsens(tri, perm)
    assert not coarsens(perm, tri)
    c1 = chamber_partition(quotientope(cambrian_ideal(parse_arc("1-3|A=2|B=", 3))))
    c2 = chamber_partition(quotientope(cambrian_ideal(parse_arc("1-3|A=|B=2", 3))))
    assert not coarsens(c1, c2) and not coarsens(c2, c1)


def test_facet_directions():
    assert len(facet_directions(permutahedron_support(frame(3)))) == 6
    seg = support_from_vertices([(0, 0), (1, -1)], frame(2))
    assert sorted(facet_directions(seg)) == [mask_of([1]), mask_of([2])]
    assert len(facet_directions(shard_support(parse_arc("1-4|A=2|B=3", 4)))) == 5


def test_caging():
    V = caged_translate(VPolytope.from_points([(0, 0), (1, -1)]))
    assert set(V.vertices) == {(0, 1), (1, 0)}
    W = VPolytope.from_points([(0, 1), (1, 0)])
    assert caged_translate(W) == W
    for alpha in enumerate_arcs(5):
        V = shard_polytope(alpha)
        shift = tuple(int(i in alpha.B or i == alpha.b) for i in range(1, alpha.n + 1))
        assert caged_translate(V) == V.translate(shift)


def test_summand_dimensions():
    for n in range(2, 6):
        assert summand_space_dim(permutahedron_support(frame(n))) == 2**n - n - 1
    assert summand_space_dim(support_from_vertices([(0, 0, 0), (1, 0, -1)], frame(3))) == 1
    assert not is_indecomposable(permutahedron_support(frame(3)))
    assert is_indecomposable(shard_support(parse_arc("1-4|A=2|B=3", 4)))


@pytest.mark.parametrize("alpha", enumerate_arcs(4), ids=str)
def test_cambrian_summands(alpha):
    I = cambrian_ideal(alpha)
    assert summand_space_dim(quotientope(I)) == len(I)


def test_mcmullen_examples():
    tri = [(0, 0, 0), (1, 0, -1), (0, 1, -1)]
    assert mcmullen_check(tri, (tri[0], tri[1]))
    sq = [(0, 0, 0), (1, -1, 0), (0, 1, -1), (1, 0, -1)]
    assert not mcmullen_check(sq, ((0, 0, 0), (1, -1, 0)))
    with pytest.raises(NotAnEdge):
        mcmullen_check(sq, ((0, 0, 0), (1, 0, -1)))


def test_extreme_points_and_facets():
    pts = [(0, 0, 0), (2, 0, -2), (1, 0, -1), (0, 2, -2)]
    assert extreme_points(pts) == sorted(map(lambda p: tuple(map(Fraction, p)), [pts[0], pts[1], pts[3]]))
    assert len(facets_bruteforce(extreme_points(pts))) == 3
    assert affine_dim(pts) == 2


def test_volume_examples():
    assert volume([e(1, 3), e(2, 3), e(3, 3)]) == Fraction(1, 2)
    assert volume([(0, 0, 0), (1, -1, 0)]) == 0
    assert volume(shard_polytope(parse_arc("1-3|A=2|B=", 3))) == Fraction(1, 2)
    assert volume(VPolytope.from_points(itertools.permutations((1, 2, 3)))) == 3


def test_mixed_volume_examples():
    d12 = [e(1, 3), e(2, 3)]
    d23 = [e(2, 3), e(3, 3)]
    d123 = [e(1, 3), e(2, 3), e(3, 3)]
    assert mixed_volume_oracle([d123, d123]) == volume(d123)
    assert mixed_volume_oracle([d12, d23]) == Fraction(1, 2)
    assert mixed_volume_oracle([d12, d12]) == 0


def test_json_roundtrip():
    s = shard_support(parse_arc("1-4|A=2|B=3", 4))
    data = polytope_to_json(s)
    assert polytope_from_json(data) == s
    assert all(isinstance(v, str) for v in data["support"].values())
    assert polytope_from_json({"n": 4, "vertices": data["vertices"]}) == s
    assert polytope_support([tuple(map(Fraction, p)) for p in data["vertices"]], frame(4)) == s
