"""Coordinates of deformed permutahedra in the shard, simplex and height bases."""

import itertools
from fractions import Fraction

import pytest
import sympy

from shardpoly.basis_conversions import (
    CoeffVector,
    NotDeformedPermutahedron,
    all_pairs_y,
    arc_of_subset,
    build_matrix,
    cambrian_y,
    canonical_keys,
    convert,
    decompose,
    permutahedron_s,
    realize,
    s_to_y,
    s_to_z,
    simplex_support,
    sympy_matrix,
    translated_shard_support,
    triangle,
    unit,
    y_to_s,
    y_to_z,
    z_to_s,
    z_to_y,
)
from shardpoly.polytope_core import (
    FanFrame,
    SupportVector,
    mask_of,
    permutahedron_support,
    polytope_support,
    sum_supports,
)
from shardpoly.quotientopes_a import loday
from shardpoly.weak_order_a import cambrian_ideal, enumerate_arcs, parse_arc, sylvester_ideal

M93_3 = [[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, 1], [0, 0, 0, 1]]
M93_4 = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0, -1, -1],
    [0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1],
    [0, 0, 0, 1, 0, 1, 0, 0, -1, 0, -1],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, -1, -1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]
M96_3 = [[1, 0, 0, 1], [0, 1, 0, 1], [1, 1, 1, 2], [0, 0, 0, 1]]
M96_4 = [
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1],
    [1, 1, 0, 1, 0, 2, 1, 0, 1, 1, 2],
    [0, 1, 1, 0, 1, 1, 2, 0, 1, 1, 2],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    [1, 1, 1, 1, 1, 2, 2, 1, 2, 2, 3],
    [1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 2],
    [0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]
M99_3 = [[1, 0, 0, -1], [0, 1, 0, -1], [-1, -1, 1, 0], [0, 0, 0, 1]]


def coeffs(basis, n, d):
    return CoeffVector.from_dict(basis, n, d)


def ints(rows):
    return [[int(x) for x in r] for r in rows]


def shard_sum_support(c: CoeffVector) -> SupportVector:
    """Oracle: assemble ``sum s_I SP(I)`` (caged) directly from shard polytopes."""
    frame = FanFrame("A", c.n)
    items = list(c.entries)
    return sum_supports([translated_shard_support(I, c.n) for I, _ in items], frame, [abs(v) for _, v in items]) \
        if all(v >= 0 for _, v in items) else None


def test_canonical_order():
    assert canonical_keys(3) == ((1, 2), (2, 3), (1, 2, 3), (1, 3))
    assert [("".join(map(str, k))) for k in canonical_keys(4)] == [
        "12", "23", "34", "123", "234", "13", "24", "1234", "124", "134", "14"]


def test_subset_arcs():
    assert arc_of_subset((1, 3, 4)) == parse_arc("1-4|A=3|B=2", 4)
    assert triangle((1, 2, 3), (1, 2, 3))
    assert not triangle((1, 3), (2, 4))


def test_shard_to_simplex_examples():
    assert s_to_y(unit("s", 4, (1, 3, 4))).as_dict() == {
        (1, 2): 1, (1, 3, 4): 1, (2, 3, 4): 1, (1, 2, 3, 4): -1}
    for i in range(1, 4):
        assert s_to_y(unit("s", 4, (i, i + 1))) == unit("y", 4, (i, i + 1))


def test_simplex_to_shard_example():
    assert y_to_s(unit("y", 4, (1, 2, 4))).as_dict() == {
        (1, 2, 4): 1, (1, 2, 3, 4): 1, (3, 4): -1, (1, 2, 3): -1}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_shard_simplex_roundtrip(n):
    for I in canonical_keys(n):
        assert y_to_s(s_to_y(unit("s", n, I))) == unit("s", n, I)
        assert s_to_y(y_to_s(unit("y", n, I))) == unit("y", n, I)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_shard_in_simplices_geometrically(n):
    frame = FanFrame("A", n)
    for I in canonical_keys(n):
        y = s_to_y(unit("s", n, I))
        pos = [(J, v) for J, v in y.entries if v > 0]
        neg = [(J, -v) for J, v in y.entries if v < 0]
        lhs = sum_supports([translated_shard_support(I, n)] + [simplex_support(J, n) for J, _ in neg],
                           frame, [1] + [v for _, v in neg])
        rhs = sum_supports([simplex_support(J, n) for J, _ in pos], frame, [v for _, v in pos])
        assert lhs == rhs


def test_simplices_to_heights():
    z = y_to_z(unit("y", 3, (1, 2)))
    assert {k for k, _ in z.entries} == {(1, 2), (1, 2, 3)}
    for n in (3, 4, 5, 6):
        for I in canonical_keys(n):
            assert z_to_y(y_to_z(unit("y", n, I))) == unit("y", n, I)


def test_height_formulas():
    z = s_to_z(coeffs("s", 4, {I: 1 for I in canonical_keys(4)}))
    # The displayed expansion of z_234 has total weight 1+1+1+1+2+1+1+2 = 10.
    assert z[(2, 3, 4)] == 10
    row = {k: 0 for k in canonical_keys(4)}
    for k, v in {(2, 3): 1, (3, 4): 1, (2, 3, 4): 1, (1, 3): 1, (2, 4): 2, (1, 2, 4): 1, (1, 3, 4): 1, (1, 4): 2}.items():
        row[k] = v
    for I in canonical_keys(4):
        assert s_to_z(unit("s", 4, I))[(2, 3, 4)] == row[I]
    s = z_to_s(coeffs("z", 4, {(2, 3, 4): 5, (1, 3): 7, (2, 3): 11, (1, 3, 4): 13}))
    assert s[(2, 3, 4)] == 5 + 7 - 11 - 13
    assert z_to_s(coeffs("z", 3, {})).as_dict() == {}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_two_paths_agree(n):
    for I in canonical_keys(n):
        assert s_to_z(unit("s", n, I)) == y_to_z(s_to_y(unit("s", n, I)))
        assert z_to_s(s_to_z(unit("s", n, I))) == unit("s", n, I)


def test_displayed_matrices():
    assert ints(build_matrix("s_of_y", 3)[1]) == M93_3
    assert ints(build_matrix("s_of_y", 4)[1]) == M93_4
    assert ints(build_matrix("z_of_s", 3)[1]) == M96_3
    assert ints(build_matrix("z_of_s", 4)[1]) == M96_4
    assert ints(build_matrix("s_of_z", 3)[1]) == M99_3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_inverse_matrices(n):
    size = len(canonical_keys(n))
    Id = sympy.eye(size)
    sy, ys = (sympy_matrix(build_matrix(w, n)[1]) for w in ("s_of_y", "y_of_s"))
    zs, sz = (sympy_matrix(build_matrix(w, n)[1]) for w in ("z_of_s", "s_of_z"))
    assert sy * ys == Id and ys * sy == Id
    assert zs * sz == Id and sz * zs == Id


X = sympy.symbols("x")
PRINTED = [(X - 1, 7), (X**2 - 3 * X + 1, 1), (X**2 - X + 1, 1)]
TRUE_MINIMAL = [(X - 1, 5), (X**2 - 3 * X + 1, 1), (X**2 - X + 1, 1)]


def _annihilates(M, factors) -> bool:
    out = sympy.eye(M.shape[0])
    for f, m in factors:
        p = sympy.Poly(f, X)
        value = sympy.zeros(*M.shape)
        for (k,), c in p.terms():
            value += c * M**k
        out = out * value**m
    return out.is_zero_matrix


def _is_minimal(M, factors) -> bool:
    """Annihilates, and lowering any multiplicity by one no longer does."""
    if not _annihilates(M, factors):
        return False
    return all(not _annihilates(M, [(g, k - (j == i)) for j, (g, k) in enumerate(factors)])
               for i in range(len(factors)))


def _m96():
    return sympy_matrix(build_matrix("z_of_s", 4)[1])


def test_characteristic_polynomial():
    M = _m96()
    assert sympy.expand(M.charpoly(X).as_expr()) == sympy.expand(sympy.Mul(*[f**m for f, m in PRINTED]))


def test_true_minimal_polynomial():
    M = _m96()
    assert _is_minimal(M, TRUE_MINIMAL)
    J = M.jordan_form(calc_transform=False)
    ones = [i for i in range(11) if J[i, i] == 1]
    runs, run = [], 1
    for i in ones[:-1]:
        if J[i, i + 1] == 1:
            run += 1
        else:
            runs.append(run)
            run = 1
    runs.append(run)
    assert sorted(runs) == [2, 5]


@pytest.mark.xfail(strict=True, reason="the printed degree-11 polynomial is the characteristic polynomial")
def test_printed_minimal_polynomial():
    assert _is_minimal(_m96(), PRINTED)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_permutahedron_coordinates(n):
    expected = {I: (min(I) - 2) * (n - max(I) - 1) for I in canonical_keys(n)}
    assert y_to_s(all_pairs_y(n)).as_dict() == {k: v for k, v in expected.items() if v}
    assert permutahedron_s(n) == coeffs("s", n, expected)
    P = permutahedron_support(FanFrame("A", n))
    assert decompose(P, "s") == coeffs("s", n, expected)
    if n >= 4:
        assert min(v for _, v in permutahedron_s(n).entries) < 0


def test_permutahedron_display_n4():
    s = decompose(permutahedron_support(FanFrame("A", 4)), "s")
    assert s[(1, 2)] == -1 and s[(3, 4)] == -1
    assert s[(1, 4)] == 1 and s[(1, 2, 3, 4)] == 1


def test_realize_perm3():
    r = realize(coeffs("s", 3, {(1, 2, 3): 1, (1, 3): 1}))
    pts = list(itertools.permutations((0, 1, 2)))
    assert r.support == polytope_support(pts, FanFrame("A", 3))
    assert not r.virtual


def test_realize_virtual():
    r = realize(coeffs("s", 4, {(1, 2): -1}))
    assert r.virtual


@pytest.mark.parametrize("n", [3, 4, 5])
def test_loday_decomposes_to_sylvester(n):
    s = decompose(loday(n), "s")
    intervals = {tuple(range(a, b + 1)) for a in range(1, n + 1) for b in range(a + 1, n + 1)}
    assert s == coeffs("s", n, {I: 1 for I in intervals})
    assert {arc_of_subset(I, n) for I, _ in s.entries} == set(sylvester_ideal(n).arcs)


@pytest.mark.parametrize("n", [3, 4])
def test_decompose_units(n):
    for I in canonical_keys(n):
        assert decompose(translated_shard_support(I, n), "s") == unit("s", n, I)
        assert decompose(simplex_support(I, n), "y") == unit("y", n, I)


@pytest.mark.parametrize("alpha", enumerate_arcs(4), ids=str)
def test_cambrian_simplex_coordinates(alpha):
    from shardpoly.basis_conversions import subset_of_arc

    ones = coeffs("s", 4, {subset_of_arc(b): 1 for b in cambrian_ideal(alpha)})
    assert s_to_y(ones) == cambrian_y(alpha)


def test_decompose_rejects_non_submodular():
    frame = FanFrame("A", 3)
    d = permutahedron_support(frame).as_dict()
    d[mask_of([1])] += 5
    with pytest.raises(NotDeformedPermutahedron):
        decompose(SupportVector.from_dict(frame, d))


def test_json_roundtrip():
    c = coeffs("s", 4, {(1, 3): Fraction(1, 3), (2, 4): -2})
    data = c.to_json()
    assert data["entries"] == {"1,3": "1/3", "2,4": "-2"}
    assert CoeffVector.from_json(data) == c
    assert convert(convert(c, "z"), "s") == c
