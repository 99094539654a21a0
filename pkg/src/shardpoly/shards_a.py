"""Type A shard polytopes.

The shard polytope of an arc ``(a, b, A, B)`` is the convex hull of the
characteristic vectors of its alternating matchings
``a_1 < b_1 < ... < a_k < b_k`` with every ``a_i`` in ``{a} ∪ A`` and every
``b_i`` in ``B ∪ {b}``; the vector has ``+1`` at each ``a_i`` and ``-1`` at
each ``b_i``.  Pseudoarcs use the same rule with the free points of
``]a, b[`` never matched.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from shardpoly.polytope_core import (
    FanFrame,
    SupportVector,
    VPolytope,
    affine_dim,
    chamber_vertex_table,
    smallest_face,
    support_from_vertices,
    sum_supports,
)
from shardpoly.weak_order_a import Arc, PseudoArc, cover_arc, enumerate_arcs, forces


@dataclass(frozen=True, order=True)
class Matching:
    """Alternating matching, stored as its sorted elements."""

    elements: tuple
    host: Arc = field(compare=False, default=None)

    @property
    def pairs(self) -> list:
        e = self.elements
        return [(e[k], e[k + 1]) for k in range(0, len(e), 2)]

    def __len__(self):
        return len(self.elements)


def _is_alternating(elements, left, right) -> bool:
    if len(elements) % 2:
        return False
    for k, x in enumerate(elements):
        if k and elements[k - 1] >= x:
            return False
        if x not in (left if k % 2 == 0 else right):
            return False
    return True


def enumerate_matchings(alpha: Arc) -> list:
    """All alternating matchings of ``alpha`` sorted by element tuple."""
    left, right = set(alpha.left), set(alpha.right)
    out = []

    def extend(prefix, start, want_left):
        if want_left:
            out.append(Matching(tuple(prefix), alpha))
        pool = left if want_left else right
        for x in range(start, alpha.b + 1):
            if x in pool:
                extend(prefix + [x], x + 1, not want_left)

    extend([], alpha.a, True)
    return sorted(out)


def matching_count(alpha: Arc) -> int:
    """Number of alternating matchings, by a left-to-right recursion.

    ``v`` counts matchings of ``[a, i]`` waiting for a right end, ``w``
    those that are complete.
    """
    left, right = set(alpha.left), set(alpha.right)
    v = w = 1
    for i in range(alpha.a + 1, alpha.b + 1):
        v, w = v + (w if i in left else 0), w + (v if i in right else 0)
    return w


def chi(M, n: int) -> tuple:
    elements = M.elements if isinstance(M, Matching) else tuple(M)
    x = [0] * n
    for k, e in enumerate(elements):
        x[e - 1] = 1 if k % 2 == 0 else -1
    return tuple(x)


def shard_polytope(alpha: Arc) -> VPolytope:
    return VPolytope.from_points([chi(M, alpha.n) for M in enumerate_matchings(alpha)], alpha.n)


@lru_cache(maxsize=None)
def shard_support(alpha: Arc) -> SupportVector:
    return support_from_vertices(shard_polytope(alpha), FanFrame("A", alpha.n))


def dimension(alpha: Arc) -> int:
    return affine_dim(shard_polytope(alpha).vertices)


def render_matching(M: Matching, alpha: Arc | None = None) -> str:
    """Dot notation over ``[a, b]``: filled for used left ends, hollow for used right ends."""
    alpha = M.host if alpha is None else alpha
    used = set(M.elements)
    left = set(alpha.left)
    chars = []
    for i in range(alpha.a, alpha.b + 1):
        if i not in used:
            chars.append("·")
        else:
            chars.append("●" if i in left else "○")
    return "".join(chars)


# ---------------------------------------------------------------------------
# Inequality description


@dataclass(frozen=True)
class Inequality:
    """``<normal, x> <= rhs``; ``kind`` records which rule produced it."""

    normal: tuple
    rhs: int
    kind: str
    index: int


def _falls_and_rises(alpha: Arc):
    """Falls and rises as pairs of consecutive matchable points ``(j, k)``."""
    left = set(alpha.left)
    right = set(alpha.right)
    pts = sorted(set(alpha.left) | set(alpha.right))
    falls, rises = [], []
    for j, k in zip(pts, pts[1:]):
        if j in left and k in right:
            falls.append((j, k))
        if (j == alpha.a or j in alpha.B) and (k in alpha.A or k == alpha.b):
            rises.append((j, k))
    return falls, rises


def crossings(alpha: Arc) -> int:
    """How often the arc passes from one side of the horizontal axis to the other."""
    side = [(+1 if i in alpha.A else -1) for i in alpha.interior]
    return sum(1 for s, t in zip(side, side[1:]) if s != t)


def shard_polytope_facets(alpha: Arc):
    """Inequalities and equations cutting out the shard polytope.

    Returns ``(inequalities, equations)``.  Equations are ``(normal, rhs)``
    pairs: the coordinates outside ``[a, b]`` and the free points of a
    pseudoarc vanish, and the coordinate sum is zero.
    """
    n = alpha.n
    ineqs = []

    def unit(i, c):
        x = [0] * n
        x[i - 1] = c
        return tuple(x)

    def prefix(j, c):
        return tuple(c if alpha.a <= i <= j else 0 for i in range(1, n + 1))

    for i in alpha.A:
        ineqs.append(Inequality(unit(i, -1), 0, "nonneg", i))
    for i in alpha.B:
        ineqs.append(Inequality(unit(i, 1), 0, "nonpos", i))
    falls, rises = _falls_and_rises(alpha)
    for j, _ in falls:
        ineqs.append(Inequality(prefix(j, 1), 1, "fall", j))
    for j, _ in rises:
        ineqs.append(Inequality(prefix(j, -1), 0, "rise", j))
    used = set(alpha.left) | set(alpha.right)
    eqs = [(unit(i, 1), 0) for i in range(1, n + 1) if i not in used]
    eqs.append((tuple([1] * n), 0))
    return ineqs, eqs


def satisfies_facets(alpha: Arc, x) -> bool:
    ineqs, eqs = shard_polytope_facets(alpha)
    dot = lambda u: sum(p * q for p, q in zip(u, x))
    return all(dot(e.normal) <= e.rhs for e in ineqs) and all(dot(u) == r for u, r in eqs)


def lattice_points_of_facets(alpha: Arc) -> list:
    """Points of ``{-1, 0, 1}^n`` satisfying the inequality description."""
    return [x for x in itertools.product((-1, 0, 1), repeat=alpha.n) if satisfies_facets(alpha, x)]


# ---------------------------------------------------------------------------
# Shards and walls


def shard_contains(alpha: Arc, x) -> bool:
    """Membership in the shard ``x_a = x_b``, ``x_a >= x_A``, ``x_a <= x_B``."""
    xa, xb = x[alpha.a - 1], x[alpha.b - 1]
    return xa == xb and all(xa >= x[i - 1] for i in alpha.A) and all(xa <= x[i - 1] for i in alpha.B)


@dataclass(frozen=True)
class WallReport:
    arc: Arc
    separating_walls_forced: bool
    own_walls_separate: bool
    walls: int

    @property
    def ok(self) -> bool:
        return self.separating_walls_forced and self.own_walls_separate


def braid_walls(n: int):
    """Adjacent chambers ``(sigma, tau, arc)`` with ``tau`` above ``sigma`` in the weak order."""
    frame = FanFrame("A", n)
    chambers = frame.chambers
    for i, j in frame.adjacent_chambers():
        s, t = chambers[i], chambers[j]
        pos = next(k for k in range(n - 1) if s[k] != t[k])
        lo, hi = (i, j) if s[pos] < s[pos + 1] else (j, i)
        yield lo, hi, cover_arc(chambers[hi], pos + 1)


def verify_prop48(alpha: Arc, polytope_support: SupportVector | None = None) -> WallReport:
    """Check wall by wall that the normal fan of ``SP(alpha)`` contains exactly forcing walls.

    Every wall separating two distinct vertices must carry an arc forcing
    ``alpha``, and every wall carrying ``alpha`` itself must separate two
    distinct vertices.  Passing another support vector gives a control run.
    """
    s = shard_support(alpha) if polytope_support is None else polytope_support
    table = chamber_vertex_table(s)
    forced = own = True
    count = 0
    for lo, hi, arc in braid_walls(alpha.n):
        count += 1
        distinct = table[lo] != table[hi]
        if distinct and not forces(arc, alpha):
            forced = False
        if arc == alpha and not distinct:
            own = False
    return WallReport(alpha, forced, own, count)


# ---------------------------------------------------------------------------
# Faces


def face_criterion(alpha: Arc, beta: Arc) -> bool:
    """Whether ``SP(alpha)`` itself is a face of ``SP(beta)``, by the combinatorial rule."""
    return forces(alpha, beta) and alpha.a in beta.left and alpha.b in beta.right


def face_translation(alpha: Arc, beta: Arc):
    """Vector ``t`` making ``SP(alpha) + t`` a face of ``SP(beta)`` when ``alpha`` forces ``beta``."""
    if not forces(alpha, beta):
        return None
    t = [0] * beta.n
    if alpha.a in beta.B:
        t[beta.a - 1] += 1
        t[alpha.a - 1] -= 1
    if alpha.b in beta.A:
        t[alpha.b - 1] += 1
        t[beta.b - 1] -= 1
    return tuple(t)


def is_face(points, big_points) -> bool:
    """Whether ``points`` is exactly the vertex set of a face of ``conv(big_points)``."""
    big = sorted({tuple(map(Fraction, p)) for p in big_points})
    pts = {tuple(map(Fraction, p)) for p in points}
    if not pts <= set(big):
        return False
    idx = [big.index(p) for p in pts]
    return smallest_face(big, idx) == frozenset(idx)


def face_embedding(alpha: Arc, beta: Arc):
    """The translation vector, after checking that the translate really is a face."""
    t = face_translation(alpha, beta)
    if t is None:
        return None
    moved = shard_polytope(alpha).translate(t).vertices
    if not is_face(moved, shard_polytope(beta).vertices):
        raise AssertionError(f"translate of SP({alpha}) is not a face of SP({beta})")
    return t


def facet_models(alpha: Arc) -> list:
    """Predicted vertex set of every facet as ``(inequality, points)``.

    A sign facet at ``i`` is the pseudoshard polytope dropping ``i``.  A
    fall or rise at ``j`` is the product of the shard polytopes of the two
    halves ``[a, j]`` and ``[j + 1, b]``, translated by ``e_j - e_{j+1}``
    when ``j`` is a fall.  This includes the fall at ``j = a``, where the
    face consists of the matchings that use ``a``.
    """
    n = alpha.n
    out = []
    ineqs, _ = shard_polytope_facets(alpha)
    for ineq in ineqs:
        if ineq.kind in ("nonneg", "nonpos"):
            i = ineq.index
            P = PseudoArc(alpha.a, alpha.b, tuple(x for x in alpha.A if x != i),
                          tuple(x for x in alpha.B if x != i), n)
            pts = shard_polytope(P).vertices
        else:
            j = ineq.index
            lo = _sub_arc(alpha, alpha.a, j)
            hi = _sub_arc(alpha, j + 1, alpha.b)
            shift = [0] * n
            if ineq.kind == "fall":
                shift[j - 1] += 1
                shift[j] -= 1
            pts = set()
            for p in lo:
                for q in hi:
                    pts.add(tuple(Fraction(x + y + z) for x, y, z in zip(p, q, shift)))
            pts = sorted(pts)
        out.append((ineq, pts))
    return out


def _sub_arc(alpha: Arc, lo: int, hi: int) -> list:
    """Vertices of the shard polytope of the restriction of ``alpha`` to ``[lo, hi]``."""
    if lo == hi:
        return [tuple([0] * alpha.n)]
    inner = range(lo + 1, hi)
    sub = Arc(lo, hi, tuple(i for i in alpha.A if i in inner), tuple(i for i in alpha.B if i in inner), alpha.n)
    return list(shard_polytope(sub).vertices)


def face_of_inequality(alpha: Arc, ineq: Inequality) -> list:
    pts = shard_polytope(alpha).vertices
    return sorted(p for p in pts if sum(a * b for a, b in zip(ineq.normal, p)) == ineq.rhs)


def forcing_hull_points(beta: Arc) -> list:
    """``0``, ``e_a - e_b`` and the translated polytopes of all arcs properly forcing ``beta``."""
    n = beta.n
    pts = {tuple([0] * n), chi((beta.a, beta.b), n)}
    for alpha in enumerate_arcs(n):
        if alpha != beta and forces(alpha, beta):
            pts.update(tuple(map(int, p)) for p in shard_polytope(alpha).translate(face_translation(alpha, beta)).vertices)
    return sorted(pts)


# ---------------------------------------------------------------------------
# Symmetries


def symmetry_image(alpha: Arc, which: str) -> Arc:
    """``phi`` exchanges ``A`` and ``B``; ``psi`` reflects ``i`` to ``n + 1 - i``."""
    n = alpha.n
    if which == "phi":
        return Arc(alpha.a, alpha.b, alpha.B, alpha.A, n)
    if which == "psi":
        bar = lambda i: n + 1 - i
        return Arc(bar(alpha.b), bar(alpha.a), tuple(map(bar, alpha.A)), tuple(map(bar, alpha.B)), n)
    raise ValueError(which)


def symmetry_check(alpha: Arc, which: str) -> bool:
    """Compare the image polytope with the transformed and translated original."""
    n = alpha.n
    image = set(shard_polytope(symmetry_image(alpha, which)).vertices)
    moved = set()
    for p in shard_polytope(alpha).vertices:
        q = list(p)
        if which == "phi":
            q = [-x for x in q]
            q[alpha.a - 1] += 1
            q[alpha.b - 1] -= 1
        else:
            q = q[::-1]
            q[n - alpha.a] -= 1
            q[n - alpha.b] += 1
        moved.add(tuple(q))
    return image == moved


# ---------------------------------------------------------------------------
# Minkowski identities


def theorem57_instance(alpha: Arc, x: int):
    """Both sides of the splitting identity at an interior point ``x``.

    Left: the arcs sending ``x`` above and below.  Right: the pseudoarc
    freeing ``x`` plus the two arcs cut at ``x``.
    """
    a, b, n = alpha.a, alpha.b, alpha.n
    if b - a < 2 or not a < x < b:
        raise ValueError("x must be an interior point of an arc of length at least 2")
    A = tuple(i for i in alpha.A if i != x)
    B = tuple(i for i in alpha.B if i != x)
    frame = FanFrame("A", n)
    lhs = shard_support(Arc(a, b, A + (x,), B, n)) + shard_support(Arc(a, b, A, B + (x,), n))
    below = lambda lo, hi: Arc(lo, hi, tuple(i for i in A if lo < i < hi), tuple(i for i in B if lo < i < hi), n)
    rhs = sum_supports([shard_support(PseudoArc(a, b, A, B, n)), shard_support(below(a, x)),
                        shard_support(below(x, b))], frame)
    return lhs, rhs


def segment_support(i: int, j: int, n: int, weight=1) -> SupportVector:
    """Support of ``weight * [0, e_i - e_j]``."""
    p = [0] * n
    p[i - 1], p[j - 1] = weight, -weight
    return support_from_vertices([tuple([0] * n), tuple(p)], FanFrame("A", n))


def minimal_arc_sum(n: int) -> SupportVector:
    frame = FanFrame("A", n)
    inner = list(range(2, n))
    supports = []
    for r in range(len(inner) + 1):
        for A in itertools.combinations(inner, r):
            supports.append(shard_support(Arc(1, n, A, tuple(i for i in inner if i not in A), n)))
    return sum_supports(supports, frame)


def zonotope_coefficient(i: int, j: int, n: int) -> int:
    return 2 ** max(i - 2, 0) * 2 ** max(n - j - 1, 0)


def minimal_arc_zonotope(n: int) -> SupportVector:
    frame = FanFrame("A", n)
    return sum_supports([segment_support(i, j, n, zonotope_coefficient(i, j, n))
                         for i, j in itertools.combinations(range(1, n + 1), 2)], frame)


def minimal_arc_zonotope_check(n: int) -> bool:
    """The arcs from 1 to n sum to a zonotope with explicit segment multiplicities."""
    return minimal_arc_sum(n) == minimal_arc_zonotope(n)


# ---------------------------------------------------------------------------
# Pairs of matchings


def _strip_common(e1: tuple, e2: tuple):
    h = 0
    while h + 2 <= min(len(e1), len(e2)) and e1[h:h + 2] == e2[h:h + 2]:
        h += 2
    t = 0
    while (t + 2 <= min(len(e1), len(e2)) - h and e1[len(e1) - t - 2:len(e1) - t] == e2[len(e2) - t - 2:len(e2) - t]):
        t += 2
    return e1[h:len(e1) - t], e2[h:len(e2) - t]


def special_family(M1: Matching, M2: Matching):
    """Index 1..4 of the exceptional family of the pair, or ``None``."""
    c1, c2 = _strip_common(M1.elements, M2.elements)
    c1, c2 = sorted((c1, c2), key=lambda c: (len(c), c))
    if len(c1) == 0 and len(c2) == 2:
        return 1
    if len(c1) == 2 and len(c2) == 2:
        if c1[0] == c2[0] and c1[1] != c2[1]:
            return 2
        if c1[1] == c2[1] and c1[0] != c2[0]:
            return 3
    if len(c1) == 2 and len(c2) == 4 and c1 == (c2[0], c2[3]):
        return 4
    return None


def decompose_matching_pair(M1: Matching, M2: Matching, alpha: Arc | None = None):
    """Another pair with the same multiset union, or the special family tag.

    Returns ``("pair", (M3, M4))`` or ``("family", k)``.  A pair is
    searched for exhaustively among the matchings of the host arc.
    """
    alpha = M1.host if alpha is None else alpha
    if M1 == M2:
        raise ValueError("the two matchings must differ")
    union = sorted(M1.elements + M2.elements)
    ms = enumerate_matchings(alpha)
    by_size = {}
    for M in ms:
        by_size.setdefault(len(M), []).append(M)
    forbidden = {M1.elements, M2.elements}
    for M3 in ms:
        if M3.elements in forbidden:
            continue
        rest = list(union)
        try:
            for e in M3.elements:
                rest.remove(e)
        except ValueError:
            continue
        rest = tuple(rest)
        if rest not in forbidden and rest >= M3.elements and _is_alternating(rest, set(alpha.left), set(alpha.right)):
            return "pair", (M3, Matching(rest, alpha))
    return "family", special_family(M1, M2)


# ---------------------------------------------------------------------------
# Normal cones


def maximizers(alpha: Arc, t) -> list:
    ms = enumerate_matchings(alpha)
    vals = [sum(t[i - 1] * c for i, c in enumerate(chi(M, alpha.n), start=1) if c) for M in ms]
    best = max(vals)
    return [M for M, v in zip(ms, vals) if v == best]


def normal_cone_contains(alpha: Arc, M: Matching, t) -> bool:
    """Whether ``chi(M)`` maximizes ``t``, tested on the neighbours ``|M Δ M'| = 2``."""
    left, right = set(alpha.left), set(alpha.right)
    x = chi(M, alpha.n)
    base = sum(ti * xi for ti, xi in zip(t, x))
    used = set(M.elements)
    pool = sorted(left | right)
    for p in pool:
        for q in pool:
            if p < q:
                cand = tuple(sorted(used ^ {p, q}))
                if _is_alternating(cand, left, right):
                    y = chi(cand, alpha.n)
                    if sum(ti * yi for ti, yi in zip(t, y)) > base:
                        return False
    return True


def pair_normal_cone_contains(alpha: Arc, i: int, j: int, t) -> bool:
    """Whether some maximizer of ``t`` contains the pair ``(i, j)``, by explicit inequalities."""
    A, B = set(alpha.A), set(alpha.B)
    left, right = set(alpha.left), set(alpha.right)
    if not (i in left and j in right and i < j):
        return False
    T = lambda k: t[k - 1]
    if not T(i) >= T(j):
        return False
    for k in range(i + 1, j):
        if k in A and not T(i) >= T(k):
            return False
        if k in B and not T(k) >= T(j):
            return False
    for jp in range(i + 1, j):
        for ip in range(jp + 1, j):
            if ip in A and jp in B and not T(ip) <= T(jp):
                return False
    for ip in range(alpha.a, i):
        if ip in left and T(ip) > T(i):
            if not any(h in B and T(i) >= T(h) for h in range(ip + 1, i)):
                return False
    for jp in range(j + 1, alpha.b + 1):
        if jp in right and T(jp) < T(j):
            if not any(l in A and T(l) >= T(j) for l in range(j + 1, jp)):
                return False
    return True


def pair_in_some_maximizer(alpha: Arc, i: int, j: int, t) -> bool:
    """Definitional counterpart of :func:`pair_normal_cone_contains`."""
    return any((i, j) in M.pairs for M in maximizers(alpha, t))


def edge_normal_cone_contains(alpha: Arc, i: int, j: int, t) -> bool:
    """Whether ``t`` selects an edge of direction ``e_i - e_j``, by the case analysis on the types of ``i, j``."""
    if i > j:
        i, j = j, i
    left, right = set(alpha.left), set(alpha.right)
    T = lambda k: t[k - 1]
    if not (i in left | right and j in left | right) or T(i) != T(j):
        return False
    cone = lambda p, q: pair_normal_cone_contains(alpha, p, q, t)
    if i in left and j in right:
        return cone(i, j)
    if i in right and j in left:
        return any(cone(p, q) for p in left if p < i for q in right if q > j)
    if i in left and j in left:
        return any(cone(i, q) for q in right if q > j)
    return any(cone(p, j) for p in left if p < i)


def edge_in_maximizing_face(alpha: Arc, i: int, j: int, t) -> bool:
    """Definitional counterpart: two maximizers differing exactly in ``{i, j}``."""
    best = {M.elements for M in maximizers(alpha, t)}
    return any(tuple(sorted(set(e) ^ {i, j})) in best for e in best)


def vertex_certificate(alpha: Arc, M: Matching) -> tuple:
    """Direction ``2 chi(M) - 1_{{a} ∪ A} + 1_{B ∪ {b}}`` maximized only at ``chi(M)``."""
    x = [2 * c for c in chi(M, alpha.n)]
    for i in alpha.left:
        x[i - 1] -= 1
    for i in alpha.right:
        x[i - 1] += 1
    return tuple(x)
