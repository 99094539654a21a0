"""Type A quotientopes as Minkowski sums of shard polytopes.

The quotientope of an arc ideal is the sum of the shard polytopes of its
arcs.  Besides the support computation this module holds the closed
forms for its vertices and heights, reference associahedra used as
independent checks, and the PS-quotientopes built from a forcing
dominant function.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from sympy import Matrix

from shardpoly.basis_conversions import (
    CoeffVector,
    canonical_keys,
    subset_of_arc,
    z_to_s,
)
from shardpoly.polytope_core import (
    ChamberPartition,
    FanFrame,
    SupportVector,
    VPolytope,
    chamber_partition,
    facet_directions,
    is_tight,
    mask_of,
    members,
    sum_supports,
    support_from_vertices,
    vertices_from_support,
)
from shardpoly.shards_a import shard_support, symmetry_image
from shardpoly.weak_order_a import (
    Arc,
    ArcIdeal,
    cambrian_ideal,
    congruence_classes,
    inverse_perm,
)


class NonpositiveWeight(ValueError):
    pass


class NotForcingDominant(ValueError):
    pass


# ---------------------------------------------------------------------------
# Closed-form vertices and heights


def v_of(t, alpha: Arc) -> tuple:
    """Vertex of ``SP(alpha)`` maximizing the direction ``t``; entries in {-1, 0, 1}."""
    a, b, A, B = alpha.a, alpha.b, set(alpha.A), set(alpha.B)
    left, right = {a} | A, B | {b}
    tv = lambda i: t[i - 1]
    out = [0] * alpha.n
    for j in range(a, b + 1):
        if j in left:
            blocked = all(
                any(h in B and tv(h) < tv(j) for h in range(i + 1, j))
                for i in range(a, j)
                if i in left and tv(i) > tv(j)
            )
            reach = any(
                k in right
                and tv(j) > tv(k)
                and all(tv(j) > tv(l) for l in range(j + 1, k) if l in A)
                for k in range(j + 1, b + 1)
            )
            if blocked and reach:
                out[j - 1] = 1
        else:
            reach = any(
                i in left
                and tv(i) > tv(j)
                and all(tv(h) > tv(j) for h in range(i + 1, j) if h in B)
                for i in range(a, j)
            )
            blocked = all(
                any(l in A and tv(l) > tv(j) for l in range(j + 1, k))
                for k in range(j + 1, b + 1)
                if k in right and tv(j) > tv(k)
            )
            if reach and blocked:
                out[j - 1] = -1
    return tuple(out)


def v_of_ideal(t, ideal) -> tuple:
    n = ideal.n
    total = [0] * n
    for alpha in ideal:
        for i, x in enumerate(v_of(t, alpha)):
            total[i] += x
    return tuple(total)


def h_of(R, alpha: Arc) -> int:
    """Maximum of ``<1_R, x>`` over ``SP(alpha)`` as a pair count."""
    R = set(R)
    B = set(alpha.B)
    left = [r for r in (alpha.a,) + alpha.A if r in R]
    right = [s for s in alpha.B + (alpha.b,) if s not in R]
    return sum(
        1
        for r in left
        for s in right
        if r < s and not any((l in B) != (l in R) for l in range(r + 1, s))
    )


def h_of_ideal(R, ideal) -> int:
    return sum(h_of(R, alpha) for alpha in ideal)


# ---------------------------------------------------------------------------
# Quotientopes


def _weights(ideal, weights):
    if weights is None:
        return {alpha: 1 for alpha in ideal}
    out = {}
    for alpha in ideal:
        w = Fraction(weights.get(alpha, 1))
        if w <= 0:
            raise NonpositiveWeight(f"weight {w} on {alpha}")
        out[alpha] = w
    return out


def quotientope(ideal, weights=None) -> SupportVector:
    """Support of ``sum_alpha w_alpha SP(alpha)`` over the ideal (default weights 1)."""
    frame = FanFrame("A", ideal.n)
    w = _weights(ideal, weights)
    arcs = sorted(w)
    return sum_supports([shard_support(al) for al in arcs], frame, [w[al] for al in arcs])


def heights_support(ideal, weights=None) -> SupportVector:
    """Same support assembled from the pair counts ``h``."""
    frame = FanFrame("A", ideal.n)
    w = _weights(ideal, weights)
    return SupportVector.from_dict(
        frame, {U: sum(w[al] * h_of(members(U), al) for al in w) for U in frame.keys}
    )


def class_vertices(ideal) -> dict:
    """Closed-form vertex of each congruence class, keyed by the class minimum."""
    part = congruence_classes(ideal)
    return {m: v_of_ideal(inverse_perm(m), ideal) for m in part.class_min}


def fan_of_ideal(ideal) -> ChamberPartition:
    """Congruence classes as a partition of the braid chambers."""
    part = congruence_classes(ideal)
    return ChamberPartition(FanFrame("A", ideal.n), frozenset(frozenset(cl) for cl in part.classes))


def verify_cor50(ideal) -> bool:
    return chamber_partition(quotientope(ideal)) == fan_of_ideal(ideal)


def verify_vertices(ideal) -> bool:
    """The closed-form class vertices are exactly the vertices of the quotientope."""
    P = vertices_from_support(quotientope(ideal))
    return set(class_vertices(ideal).values()) == set(P.vertices)


def ray_check(ideal, R) -> bool:
    """Whether the braid ray of ``R`` survives in the quotient fan.

    ``R`` is the set of low coordinates of the ray.  For consecutive
    elements of ``R`` the down arc joining them has to be in the ideal,
    and for consecutive elements outside ``R`` with everything between
    in ``R`` the up arc has to be in the ideal.
    """
    n = ideal.n
    R = set(R)
    for a, b in itertools.combinations(range(1, n + 1), 2):
        inner = tuple(range(a + 1, b))
        if a in R and b in R and not any(x in R for x in inner):
            if Arc(a, b, (), inner, n) not in ideal:
                return False
        if a not in R and b not in R and all(x in R for x in inner):
            if Arc(a, b, inner, (), n) not in ideal:
                return False
    return True


def surviving_rays(ideal) -> set:
    """Upper-set masks of the quotient fan rays, read off the facets."""
    return set(facet_directions(quotientope(ideal)))


def ray_check_agrees(ideal) -> bool:
    """``ray_check(R)`` holds iff the complement of ``R`` is a facet direction."""
    n = ideal.n
    full = (1 << n) - 1
    rays = surviving_rays(ideal)
    for U in range(1, full):
        if ray_check(ideal, members(full ^ U)) != (U in rays):
            return False
    return True


# ---------------------------------------------------------------------------
# Reference associahedra


def loday(n: int) -> VPolytope:
    """Classical coordinates ``(j - i)(k - j)`` over the sylvester classes."""
    from shardpoly.weak_order_a import sylvester_ideal

    part = congruence_classes(sylvester_ideal(n))
    pts = []
    for m in part.class_min:
        t = inverse_perm(m)
        pt = []
        for j in range(1, n + 1):
            i = max([0] + [h for h in range(1, j) if t[h - 1] > t[j - 1]])
            k = min([l for l in range(j + 1, n + 1) if t[j - 1] < t[l - 1]] + [n + 1])
            pt.append((j - i) * (k - j))
        pts.append(tuple(pt))
    return VPolytope.from_points(pts)


def cambrian_ray(alpha: Arc, R) -> bool:
    """Whether ``R`` (a proper nonempty subset of ``[a, b]``) is a ray of the Cambrian fan.

    Between two elements of ``R`` every element is in ``R`` or in ``B``;
    between two elements outside ``R`` no element of ``B`` lies in ``R``.
    """
    a, b, B = alpha.a, alpha.b, set(alpha.B)
    R = set(R)
    for i, j, k in itertools.combinations(range(a, b + 1), 3):
        if i in R and k in R and j not in R and j not in B:
            return False
        if i not in R and k not in R and j in R and j in B:
            return False
    return True


def hl(alpha: Arc) -> VPolytope:
    """Cambrian associahedron of ``alpha`` from its inequality description.

    The polytope lives on the coordinates ``[a, b]`` (the others are zero),
    has coordinate sum ``binom(b - a + 2, 2)`` and facets
    ``<1_R, x> >= binom(|R| + 1, 2)`` for the Cambrian rays ``R``.  The
    vertex of a congruence class solves the facet equations of the rays
    lying in the class cone.
    """
    a, b, n = alpha.a, alpha.b, alpha.n
    span = list(range(a, b + 1))
    part = congruence_classes(cambrian_ideal(alpha))
    pts = []
    for cl in part.classes:
        rows = [[1] * len(span)]
        rhs = [comb(b - a + 2, 2)]
        seen = set()
        for sigma in cl:
            for k in range(1, n):
                upper = set(sigma[k:])
                R = frozenset(x for x in span if x not in upper)
                if not R or len(R) == len(span) or R in seen or not cambrian_ray(alpha, R):
                    continue
                seen.add(R)
                rows.append([int(x in R) for x in span])
                rhs.append(comb(len(R) + 1, 2))
        sol = _solve(rows, rhs)
        pt = [Fraction(0)] * n
        for x, v in zip(span, sol):
            pt[x - 1] = v
        pts.append(tuple(pt))
    return VPolytope.from_points(pts)


def _solve(rows, rhs) -> list:
    M = Matrix(rows)
    sol, params = M.gauss_jordan_solve(Matrix(rhs))
    if params.shape[0]:
        raise ValueError("class cone rays do not pin a vertex")
    return [Fraction(int(x.p), int(x.q)) for x in sol]


def hl_shift(alpha: Arc) -> tuple:
    """Translation taking the shard sum of the Cambrian ideal to :func:`hl`."""
    return tuple(j - alpha.a + 1 if alpha.a <= j <= alpha.b else 0 for j in range(1, alpha.n + 1))


def reference_associahedron(kind: str, arg) -> VPolytope:
    if kind == "loday":
        return loday(arg)
    if kind == "hl":
        return hl(arg)
    raise ValueError(f"unknown reference associahedron {kind!r}")


def loday_facet_rhs(i: int, j: int) -> int:
    """Lower bound of ``<1_[i,j], x>`` on the classical Loday associahedron."""
    return comb(j - i + 2, 2)


def full_ideal_vertex(t) -> tuple:
    """Closed-form vertex of the quotientope of all arcs in direction ``t``.

    Coordinate ``j`` gains ``2^(n-1+j-k)`` for each inversion ``(j, k)`` to
    its right and loses ``2^(n-1+i-j)`` for each inversion ``(i, j)`` to its left.
    """
    n = len(t)
    out = []
    for j in range(n):
        left = sum(Fraction(2) ** (i - j) for i in range(j) if t[i] > t[j])
        right = sum(Fraction(2) ** (j - k) for k in range(j + 1, n) if t[j] > t[k])
        out.append(2 ** (n - 1) * (right - left))
    return tuple(out)


def full_ideal_height(R, n: int) -> int:
    """Maximum of ``<1_R, x>``: ``2^(n-1+i-j)`` summed over ``i < j`` with ``i`` in ``R`` and ``j`` not."""
    R = set(R)
    return sum(2 ** (n - 1 + i - j) for i in R for j in range(i + 1, n + 1) if j not in R)


# ---------------------------------------------------------------------------
# Minkowski sums of Cambrian associahedra and symmetries


def verify_thm1(ideal) -> bool:
    """The sum of the Cambrian quotientopes of the minimal arcs has the ideal's fan."""
    frame = FanFrame("A", ideal.n)
    summands = [quotientope(cambrian_ideal(al)) for al in ideal.minimal_arcs()]
    total = sum_supports(summands, frame)
    return chamber_partition(total) == fan_of_ideal(ideal)


def _caged(s: SupportVector) -> dict:
    from shardpoly.basis_conversions import cage

    return cage(s).as_dict()


def symmetric_ideal(ideal, which: str):
    return ArcIdeal(frozenset(symmetry_image(al, which) for al in ideal), ideal.n)


def verify_symmetry(ideal, which: str) -> bool | None:
    """If the ideal is fixed by the symmetry, its quotientope is fixed up to translation.

    Returns None when the ideal is not fixed.
    """
    if symmetric_ideal(ideal, which) != ideal:
        return None
    P = vertices_from_support(quotientope(ideal))
    n = ideal.n
    if which == "phi":
        img = [tuple(-x for x in v) for v in P.vertices]
    else:
        img = [tuple(reversed(v)) for v in P.vertices]
    Q = support_from_vertices(img, FanFrame("A", n))
    return _caged(Q) == _caged(quotientope(ideal))


# ---------------------------------------------------------------------------
# PS-quotientopes


def competitors(S, n: int):
    """Subsets spanning at least ``S`` and agreeing with ``S`` strictly inside its span."""
    S = set(S)
    lo, hi = min(S), max(S)
    inside = {x for x in S if lo < x < hi}
    for R in canonical_keys(n):
        if R == tuple(sorted(S)) or min(R) > lo or max(R) < hi:
            continue
        if {x for x in R if lo < x < hi} == inside:
            yield R


def validate_forcing_dominant(f, n: int) -> bool:
    """``f(S) > sum f(R)`` over the competitors of ``S``, for every ``S``."""
    for S in canonical_keys(n):
        if Fraction(f(S)) <= 0:
            return False
        if Fraction(f(S)) <= sum((Fraction(f(R)) for R in competitors(S, n)), Fraction(0)):
            return False
    return True


def default_f(n: int):
    """``(2^n + 1)^(n - (max S - min S))``: shorter spans dominate."""
    base = 2**n + 1
    return lambda S: base ** (n - (max(S) - min(S)))


def gamma(S, R) -> int:
    S, R = set(S), set(R)
    lo, hi = min(S), max(S)
    if len({lo, hi} & R) != 1:
        return 0
    return int(all((x in S) == (x in R) for x in range(lo + 1, hi)))


def Gamma(S, I, n: int) -> int:
    """``gamma(S, G) + gamma(S, H) - gamma(S, I) - gamma(S, J)`` with the three reflections of ``I``."""
    I = set(I)
    lo, hi = min(I), max(I)
    G = I ^ set(range(1, lo + 1))
    H = I ^ set(range(hi, n + 1))
    J = I ^ set(range(1, lo + 1)) ^ set(range(hi, n + 1))
    g = lambda R: gamma(S, R) if R else 0
    return g(G) + g(H) - g(I) - g(J)


def Gamma_cases(S, I, n: int) -> int:
    """The five-case value of ``Gamma`` read off ``S``."""
    S, I = set(S), set(I)
    lo, hi = min(I), max(I)
    if S == I:
        return 2
    for x in range(1, lo):
        left = set(range(x, lo + 1)) ^ I
        for y in range(hi + 1, n + 1):
            if S == left | {y} or S == {x} | (I ^ set(range(hi, y + 1))):
                return 1
    for x in range(1, lo):
        if S == set(range(x, lo + 1)) ^ I or S == {x} | I:
            return -1
    for y in range(hi + 1, n + 1):
        if S == I ^ set(range(hi, y + 1)) or S == I | {y}:
            return -1
    return 0


def ps_subsets(ideal) -> list:
    return [subset_of_arc(al) for al in ideal]


def ps_heights(ideal, f) -> dict:
    """``h(R) = sum_S f(S) gamma(S, R)`` for every nonempty ``R``, keyed by mask."""
    n = ideal.n
    S_list = ps_subsets(ideal)
    out = {}
    for mask in range(1, 1 << n):
        R = members(mask)
        out[mask] = sum((Fraction(f(S)) * gamma(S, R) for S in S_list), Fraction(0))
    return out


def ps_quotientope(ideal, f=None) -> SupportVector:
    """Support of the PS-quotientope.

    The ray ``r(R) = |R| 1 - n 1_R`` gives ``<r(R), x> = |R| c - n <1_R, x>``
    with ``c = <1, x> = h([n]) = 0``, so the inequality reads
    ``<1_R, x> >= -h(R) / n``.  The outer support of an upper set ``U`` is
    then ``c - z_([n] - U) = h([n] - U) / n``.
    """
    n = ideal.n
    f = f or default_f(n)
    if not validate_forcing_dominant(f, n):
        raise NotForcingDominant("f fails the domination inequality")
    h = ps_heights(ideal, f)
    full = (1 << n) - 1
    frame = FanFrame("A", n)
    vals = {U: (h[full ^ U] / n if U != full else Fraction(0)) for U in frame.keys}
    s = SupportVector.from_dict(frame, vals)
    if not is_tight(s):
        raise NotForcingDominant("heights are not tight")
    return s


def ps_inner_heights(ideal, f) -> CoeffVector:
    n = ideal.n
    h = ps_heights(ideal, f)
    return CoeffVector.from_dict("z", n, {R: -h[mask_of(R)] / n for R in canonical_keys(n)})


def ps_singletons(ideal, f) -> tuple:
    n = ideal.n
    h = ps_heights(ideal, f)
    return tuple(-h[1 << (i - 1)] / n for i in range(1, n + 1))


def verify_ps_fan(ideal, f=None) -> bool:
    return chamber_partition(ps_quotientope(ideal, f)) == fan_of_ideal(ideal)


def verify_prop100(ideal, f=None) -> bool:
    """Shard coordinates of the caged PS-quotientope are positive exactly on the ideal.

    Also checks that each coefficient equals ``(1/n) sum_S f(S) Gamma(S, I)``.
    """
    n = ideal.n
    f = f or default_f(n)
    ps_quotientope(ideal, f)
    h = ps_heights(ideal, f)
    # Caging subtracts the coordinate minima -h({i})/n from every height.
    z = CoeffVector.from_dict(
        "z", n, {R: (-h[mask_of(R)] + sum(h[1 << (i - 1)] for i in R)) / n for R in canonical_keys(n)}
    )
    s = z_to_s(z)
    inside = set(ps_subsets(ideal))
    S_list = ps_subsets(ideal)
    for I in canonical_keys(n):
        expected = sum((Fraction(f(S)) * Gamma(S, I, n) for S in S_list), Fraction(0)) / n
        if s[I] != expected:
            return False
        if (s[I] > 0) != (I in inside) or (I not in inside and s[I] != 0):
            return False
    return True
