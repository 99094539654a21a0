"""Type B: signed permutations, B-arcs, their congruences and shard polytopes.

Points of ``[±n]`` are the nonzero integers ``-n..n``.  Whenever a type A
routine is reused, ``[±n]`` is relabelled order-preservingly as the
positions ``1..2n`` (``x < 0`` goes to ``x + n + 1`` and ``x > 0`` to
``x + n``), so central symmetry becomes ``p -> 2n + 1 - p``.

A B-arc is stored through its representative A-arc: the rightmost of the
pair ``{-alpha, alpha}``, which is the one with ``b >= |a|``.  The
convention ``x_{-i} = -x_i`` is applied only when folding points of
``R^{[±n]}`` down to ``R^n``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from shardpoly import _kernels
from shardpoly.polytope_core import (
    ChamberPartition,
    FanFrame,
    SizeCapExceeded,
    SupportVector,
    VPolytope,
    affine_dim,
    chamber_partition,
    chamber_vertex_table,
    extreme_points,
    facet_directions,
    signed_key,
    signed_members,
    sum_supports,
    summand_space_dim,
    support_from_vertices,
)
from shardpoly.quotientopes_a import NonpositiveWeight
from shardpoly.shards_a import WallReport, enumerate_matchings
from shardpoly.weak_order_a import (
    Arc,
    ArcIdeal,
    InvalidArc,
    arcs_cross,
    cover_arc,
    diagram_to_perm,
    enumerate_arcs,
    forces,
    perm_to_diagram,
    NoncrossingDiagram,
)

MAX_N_POLY = 4
MAX_N_SWEEP = 3

SEPARATED, SINGULAR, OVERLAPPED = "separated", "singular", "overlapped"


class NotAnIdeal(ValueError):
    pass


class AsymmetricInverse(ValueError):
    pass


class NotSymmetrizable(InvalidArc):
    pass


def _cap(n: int, cap: int):
    if n > cap:
        raise SizeCapExceeded(f"type B operation capped at n <= {cap}")


# ---------------------------------------------------------------------------
# Positions


def pos(x: int, n: int) -> int:
    return x + n + 1 if x < 0 else x + n


def val(p: int, n: int) -> int:
    return p - n - 1 if p <= n else p - n


def signed_range(lo: int, hi: int) -> list:
    """The nonzero integers of ``[lo, hi]`` in increasing order."""
    return [x for x in range(lo, hi + 1) if x != 0]


# ---------------------------------------------------------------------------
# A-arcs on [±n]


@dataclass(frozen=True, order=True)
class SignedArc:
    """A-arc ``(a, b, A, B)`` on ``[±n]``; ``A`` and ``B`` partition ``]a, b[ - {0}``."""

    a: int
    b: int
    A: tuple = ()
    B: tuple = ()
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(sorted(self.A)))
        object.__setattr__(self, "B", tuple(sorted(self.B)))
        if self.n == 0:
            object.__setattr__(self, "n", max(abs(self.a), abs(self.b)))
        n = self.n
        if not (-n <= self.a < self.b <= n) or 0 in (self.a, self.b):
            raise InvalidArc(f"bad endpoints {self.a}, {self.b} for n={n}")
        if set(self.A) & set(self.B):
            raise InvalidArc("A and B intersect")
        if set(self.A) | set(self.B) != set(signed_range(self.a + 1, self.b - 1)):
            raise InvalidArc("A and B must partition the open interval")

    def __neg__(self) -> "SignedArc":
        return SignedArc(-self.b, -self.a, tuple(-x for x in self.B), tuple(-x for x in self.A), self.n)

    def positions(self) -> Arc:
        n = self.n
        return Arc(pos(self.a, n), pos(self.b, n), [pos(x, n) for x in self.A], [pos(x, n) for x in self.B], 2 * n)

    @classmethod
    def from_positions(cls, alpha: Arc, n: int) -> "SignedArc":
        return cls(val(alpha.a, n), val(alpha.b, n), [val(x, n) for x in alpha.A], [val(x, n) for x in alpha.B], n)

    def __str__(self):
        return "{}-{}|A={}|B={}".format(self.a, self.b, ",".join(map(str, self.A)), ",".join(map(str, self.B)))


def is_symmetrizable(alpha: SignedArc) -> bool:
    """Either centrally symmetric, or not crossing its mirror image."""
    if alpha == -alpha:
        return True
    if alpha.a == -alpha.b:
        return False
    return not arcs_cross(alpha.positions(), (-alpha).positions())


# ---------------------------------------------------------------------------
# B-arcs


@dataclass(frozen=True, order=True)
class BArc:
    rep: SignedArc

    def __post_init__(self):
        r = self.rep
        if r.b < abs(r.a):
            raise InvalidArc(f"{r} is not the rightmost arc of its pair")
        if not is_symmetrizable(r):
            raise NotSymmetrizable(f"{r} crosses its mirror image")

    @classmethod
    def of(cls, alpha: SignedArc) -> "BArc":
        """The B-arc containing either arc of the pair."""
        return cls(alpha if alpha.b >= abs(alpha.a) else -alpha)

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def cls(self) -> str:
        return classify(self)

    @property
    def arcs(self) -> tuple:
        """The distinct A-arcs of the pair (one for singular B-arcs)."""
        r = self.rep
        return (r,) if r == -r else (-r, r)

    @property
    def upper_is_rep(self):
        return upper_lower(self) == "rep" if self.cls == OVERLAPPED else None

    def upper(self) -> SignedArc:
        return self.rep if self.upper_is_rep else -self.rep

    def __str__(self):
        return str(self.rep)


def classify(beta: BArc) -> str:
    a, b = beta.rep.a, beta.rep.b
    if a > 0:
        return SEPARATED
    if a == -b:
        return SINGULAR
    return OVERLAPPED


def upper_lower(beta: BArc) -> str:
    """Which arc of an overlapped pair passes above: ``"rep"`` or ``"neg"``.

    The representative is upper when ``-a`` lies in ``A`` and ``-i`` lies in
    ``A`` for every ``i`` of ``]a, -a[`` below the arc.
    """
    r = beta.rep
    if classify(beta) != OVERLAPPED:
        raise ValueError(f"{beta} is not overlapped")
    A, B = set(r.A), set(r.B)
    upper = -r.a in A and all(-i in A for i in B if r.a < i < -r.a)
    lower = -r.a in B and all(-i in B for i in A if r.a < i < -r.a)
    if upper == lower:
        raise InvalidArc(f"{beta} is neither upper nor lower")
    return "rep" if upper else "neg"


_BARC_RE = re.compile(r"^\s*(-?\d+)-(-?\d+)\|A=([-\d,]*)\|B=([-\d,]*)\s*$")


def parse_barc(text: str, n: int) -> BArc:
    """Read ``a-b|A=...|B=...`` in ``[±n]`` coordinates; either arc of the pair is accepted."""
    m = _BARC_RE.match(text)
    if m is None:
        raise InvalidArc(f"cannot parse B-arc {text!r}")
    ints = lambda s: tuple(int(t) for t in s.split(",") if t != "")
    alpha = SignedArc(int(m.group(1)), int(m.group(2)), ints(m.group(3)), ints(m.group(4)), n)
    if not is_symmetrizable(alpha):
        raise NotSymmetrizable(f"{alpha} crosses its mirror image")
    return BArc.of(alpha)


def format_barc(beta: BArc) -> str:
    return str(beta.rep)


def barc_to_dict(beta: BArc) -> dict:
    r = beta.rep
    out = {"text": str(r), "a": r.a, "b": r.b, "A": list(r.A), "B": list(r.B), "n": r.n, "class": beta.cls}
    if beta.cls == OVERLAPPED:
        out["upper_is_rep"] = beta.upper_is_rep
    return out


@lru_cache(maxsize=None)
def enumerate_b_arcs(n: int) -> tuple:
    """All B-arcs on ``[±n]``, sorted by representative."""
    out = set()
    for alpha in enumerate_arcs(2 * n):
        s = SignedArc.from_positions(alpha, n)
        if s.b >= abs(s.a) and is_symmetrizable(s):
            out.add(BArc(s))
    return tuple(sorted(out))


def new_arc_counts(n: int) -> dict:
    """Class breakdown of the B-arcs touching ``±n``."""
    counts = {SEPARATED: 0, SINGULAR: 0, OVERLAPPED: 0}
    for beta in enumerate_b_arcs(n):
        if beta.rep.b == n:
            counts[beta.cls] += 1
    return counts


# ---------------------------------------------------------------------------
# Forcing and ideals


def a_forces(x: SignedArc, y: SignedArc) -> bool:
    return forces(x.positions(), y.positions())


def b_forces(beta: BArc, beta2: BArc) -> bool:
    """Forcing between B-arcs, with the same orientation as the type A ``forces``."""
    if beta.cls == OVERLAPPED:
        return beta2.cls == OVERLAPPED and a_forces(beta.upper(), beta2.upper())
    return any(a_forces(x, y) for x in beta.arcs for y in beta2.arcs)


@dataclass(frozen=True)
class BArcIdeal:
    """Set of B-arcs containing every B-arc forcing one of its members."""

    barcs: frozenset
    n: int

    def __post_init__(self):
        object.__setattr__(self, "barcs", frozenset(self.barcs))

    def __contains__(self, beta):
        return beta in self.barcs

    def __len__(self):
        return len(self.barcs)

    def __iter__(self):
        return iter(sorted(self.barcs))

    def is_closed(self) -> bool:
        return all(
            g in self.barcs for beta in self.barcs for g in enumerate_b_arcs(self.n) if b_forces(g, beta)
        )


def b_close_upward(seed, n: int) -> BArcIdeal:
    seed = list(seed)
    return BArcIdeal(frozenset(g for g in enumerate_b_arcs(n) if any(b_forces(g, s) for s in seed)), n)


def full_b_ideal(n: int) -> BArcIdeal:
    return BArcIdeal(frozenset(enumerate_b_arcs(n)), n)


@lru_cache(maxsize=None)
def b_forcing_masks(n: int) -> tuple:
    arcs = enumerate_b_arcs(n)
    out = []
    for j, be in enumerate(arcs):
        m = 0
        for i, g in enumerate(arcs):
            if i != j and b_forces(g, be):
                m |= 1 << i
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def b_ideal_masks(n: int) -> tuple:
    """Every B-arc ideal as a bitmask over :func:`enumerate_b_arcs`."""
    _cap(n, MAX_N_SWEEP)
    arcs = enumerate_b_arcs(n)
    order = sorted(range(len(arcs)), key=lambda k: (arcs[k].rep.b - arcs[k].rep.a, k))
    masks = _kernels.enumerate_upper_sets(order, list(b_forcing_masks(n)))
    return tuple(sorted(masks, key=lambda m: (bin(m).count("1"), m)))


def ideal_of_mask(mask: int, n: int) -> BArcIdeal:
    arcs = enumerate_b_arcs(n)
    return BArcIdeal(frozenset(arcs[k] for k in range(len(arcs)) if mask >> k & 1), n)


def enumerate_b_ideals(n: int):
    for m in b_ideal_masks(n):
        yield ideal_of_mask(m, n)


def symmetrize_ideal(ideal: ArcIdeal, n: int | None = None) -> BArcIdeal:
    """B-arcs of the symmetrizable arcs of an arc ideal on the ``2n`` positions."""
    n = n or ideal.n // 2
    out = set()
    for alpha in ideal:
        s = SignedArc.from_positions(alpha, n)
        if is_symmetrizable(s):
            out.add(BArc.of(s))
    res = BArcIdeal(frozenset(out), n)
    if not res.is_closed():
        raise NotAnIdeal("symmetrized set is not closed under B-forcing")
    return res


@lru_cache(maxsize=None)
def _subarc_needs(n: int) -> dict:
    """For each arc on the positions, the mask of B-arcs of its symmetrizable subarcs."""
    index = {be: k for k, be in enumerate(enumerate_b_arcs(n))}
    arcs = enumerate_arcs(2 * n)
    out = {}
    for alpha in arcs:
        m = 0
        for g in arcs:
            s = SignedArc.from_positions(g, n)
            if forces(g, alpha) and is_symmetrizable(s):
                m |= 1 << index[BArc.of(s)]
        out[alpha] = m
    return out


def is_symmetrized_mask(mask: int, n: int) -> bool:
    """Whether the ideal with this mask comes from some arc ideal on ``[±n]``.

    The largest candidate arc ideal keeps every arc whose symmetrizable
    subarcs all belong to the ideal; the ideal arises exactly when, for
    each of its B-arcs, one of the two A-arcs is such a candidate.
    """
    needs = _subarc_needs(n)
    arcs = enumerate_b_arcs(n)
    for k, beta in enumerate(arcs):
        if mask >> k & 1 and not any(needs[x.positions()] & ~mask == 0 for x in beta.arcs):
            return False
    return True


def is_symmetrized(ideal: BArcIdeal) -> bool:
    index = {be: k for k, be in enumerate(enumerate_b_arcs(ideal.n))}
    return is_symmetrized_mask(sum(1 << index[be] for be in ideal), ideal.n)


def symmetrized_count(n: int) -> int:
    return sum(is_symmetrized_mask(m, n) for m in b_ideal_masks(n))


def sylvester_b_ideal(n: int) -> BArcIdeal:
    return symmetrize_ideal(ArcIdeal(frozenset(al for al in enumerate_arcs(2 * n) if al.is_up()), 2 * n), n)


def cambrian_b_ideal(beta: BArc) -> BArcIdeal:
    """Symmetrization of the arc ideal generated by a separated or singular B-arc."""
    if beta.cls == OVERLAPPED:
        raise ValueError("Cambrian ideals need a separated or singular B-arc")
    n = beta.n
    r = beta.rep.positions()
    return symmetrize_ideal(ArcIdeal(frozenset(g for g in enumerate_arcs(2 * n) if forces(g, r)), 2 * n), n)


# ---------------------------------------------------------------------------
# Signed permutations


@dataclass(frozen=True, order=True)
class SignedPermutation:
    word: tuple

    def __post_init__(self):
        w = tuple(self.word)
        object.__setattr__(self, "word", w)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.word)

    def full(self) -> tuple:
        """Values at positions ``-n..-1, 1..n``."""
        return tuple(-x for x in reversed(self.word)) + self.word

    def positions_word(self) -> tuple:
        n = self.n
        return tuple(pos(x, n) for x in self.full())

    def inversions(self) -> frozenset:
        s = self.word
        n = self.n
        out = {(s[i], s[j]) for i in range(n) for j in range(i + 1, n) if s[i] > s[j]}
        out |= {(-s[i], s[j]) for i in range(n) for j in range(i, n) if -s[i] > s[j]}
        return frozenset(out)

    def __str__(self):
        return " ".join(map(str, self.word))


def signed_perms(n: int) -> list:
    return [SignedPermutation(w) for w in FanFrame("B", n).chambers]


def _from_positions_word(word, n: int) -> SignedPermutation:
    full = [val(p, n) for p in word]
    if any(full[i] != -full[2 * n - 1 - i] for i in range(2 * n)):
        raise AsymmetricInverse(f"{full} is not centrally symmetric")
    return SignedPermutation(tuple(full[n:]))


def b_perm_to_diagram(sigma, color: str = "down") -> frozenset:
    """B-arcs over the descents (down) or ascents (up) of the symmetric word."""
    sigma = sigma if isinstance(sigma, SignedPermutation) else SignedPermutation(sigma)
    D = perm_to_diagram(sigma.positions_word(), color)
    return frozenset(BArc.of(SignedArc.from_positions(al, sigma.n)) for al in D.arcs)


def b_diagram_to_perm(barcs, n: int, color: str = "down") -> SignedPermutation:
    arcs = frozenset(x.positions() for beta in barcs for x in beta.arcs)
    word = diagram_to_perm(NoncrossingDiagram(arcs, color, 2 * n))
    return _from_positions_word(word, n)


def barc_to_join_irreducible(beta: BArc) -> SignedPermutation:
    """The B-permutation with the single descent labelled by ``beta``."""
    r = beta.rep
    n, a, b, A, B = r.n, r.a, r.b, list(r.A), list(r.B)
    neg = lambda xs: [-x for x in xs]
    if a == -b:
        full = signed_range(-n, a - 1) + A + [b, a] + B + signed_range(b + 1, n)
    elif a > 0:
        full = (
            signed_range(-n, -b - 1) + neg(B[::-1]) + [-a, -b] + neg(A[::-1]) + signed_range(-a + 1, -1)
            + signed_range(1, a - 1) + A + [b, a] + B + signed_range(b + 1, n)
        )
    elif -a in A:
        C = sorted(((set(neg(A)) - set(B)) | (set(A) - set(neg(B)))) - {a, -a})
        full = signed_range(-n, -b - 1) + neg(B[::-1]) + [-a, -b] + C + [b, a] + B + signed_range(b + 1, n)
    else:
        C = sorted(set(B) & set(neg(B)))
        D = sorted(x for x in B if -a < x < b)
        full = (
            signed_range(-n, -b - 1) + neg(D[::-1]) + A + [b, a] + C + [-a, -b] + neg(A[::-1]) + D
            + signed_range(b + 1, n)
        )
    if sorted(full) != signed_range(-n, n) or any(full[i] != -full[2 * n - 1 - i] for i in range(2 * n)):
        raise AsymmetricInverse(f"{full} is not a symmetric word")
    return SignedPermutation(tuple(full[n:]))


def b_descents(sigma: SignedPermutation) -> list:
    """Descent positions ``0..n-1``; ``0`` is the sign of the first letter."""
    w = sigma.word
    out = [0] if w[0] < 0 else []
    return out + [i for i in range(1, sigma.n) if w[i - 1] > w[i]]


def b_weak_covers(n: int):
    """Triples ``(sigma, tau, beta)``: ``tau`` covers ``sigma`` across a wall labelled ``beta``."""
    for tau in signed_perms(n):
        w = tau.word
        pw = tau.positions_word()
        for i in b_descents(tau):
            if i == 0:
                lower = (-w[0],) + w[1:]
            else:
                lw = list(w)
                lw[i - 1], lw[i] = lw[i], lw[i - 1]
                lower = tuple(lw)
            label = BArc.of(SignedArc.from_positions(cover_arc(pw, n + i), n))
            yield SignedPermutation(lower), tau, label


@lru_cache(maxsize=None)
def _cover_table(n: int):
    """Chamber-index edges and the B-arc index labelling each."""
    frame = FanFrame("B", n)
    index = {c: k for k, c in enumerate(frame.chambers)}
    arc_index = {be: k for k, be in enumerate(enumerate_b_arcs(n))}
    edges, labels = [], []
    for sigma, tau, beta in b_weak_covers(n):
        edges.append((index[sigma.word], index[tau.word]))
        labels.append(arc_index[beta])
    return np.array(edges, dtype=np.int64), np.array(labels, dtype=np.int64)


@dataclass(frozen=True)
class BCongruencePartition:
    n: int
    classes: tuple  # tuples of signed words

    def as_blocks(self) -> frozenset:
        return frozenset(frozenset(cl) for cl in self.classes)

    def as_chamber_partition(self) -> ChamberPartition:
        return ChamberPartition(FanFrame("B", self.n), self.as_blocks())

    def class_min(self) -> tuple:
        return tuple(min(cl, key=lambda w: len(SignedPermutation(w).inversions())) for cl in self.classes)


def b_congruence_classes(ideal: BArcIdeal) -> BCongruencePartition:
    """Components of the B weak order after contracting covers labelled outside ``ideal``."""
    n = ideal.n
    frame = FanFrame("B", n)
    chambers = frame.chambers
    parent = list(range(len(chambers)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    arcs = enumerate_b_arcs(n)
    edges, labels = _cover_table(n)
    for (u, v), lab in zip(edges, labels):
        if arcs[lab] not in ideal.barcs:
            parent[find(u)] = find(v)
    groups = {}
    for k, c in enumerate(chambers):
        groups.setdefault(find(k), []).append(c)
    return BCongruencePartition(n, tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])))


def b_quotient_degrees(part: BCongruencePartition) -> list:
    where = {w: k for k, cl in enumerate(part.classes) for w in cl}
    nbrs = [set() for _ in part.classes]
    for sigma, tau, _ in b_weak_covers(part.n):
        x, y = where[sigma.word], where[tau.word]
        if x != y:
            nbrs[x].add(y)
            nbrs[y].add(x)
    return [len(s) for s in nbrs]


# ---------------------------------------------------------------------------
# Folding and shard polytopes


def rho_b_project(V, n: int | None = None) -> VPolytope:
    """Fold points of ``R^{[±n]}`` (position order) by ``x_i - x_{-i}`` and keep the hull vertices."""
    pts = V.vertices if isinstance(V, VPolytope) else list(V)
    n = n or len(pts[0]) // 2
    folded = [tuple(Fraction(p[pos(i, n) - 1] - p[pos(-i, n) - 1]) for i in range(1, n + 1)) for p in pts]
    return VPolytope.from_points(extreme_points(folded), n)


def folded_matchings(beta: BArc) -> list:
    """Folded characteristic vectors of the matchings of the representative arc."""
    n = beta.n
    out = []
    for M in enumerate_matchings(beta.rep.positions()):
        x = [0] * n
        for k, p in enumerate(M.elements):
            v = val(p, n)
            sign = 1 if k % 2 == 0 else -1
            x[abs(v) - 1] += sign if v > 0 else -sign
        out.append(tuple(x))
    return out


@lru_cache(maxsize=None)
def b_shard_polytope(beta: BArc) -> VPolytope:
    _cap(beta.n, MAX_N_POLY)
    return VPolytope.from_points(extreme_points(folded_matchings(beta)), beta.n)


@lru_cache(maxsize=None)
def b_shard_support(beta: BArc) -> SupportVector:
    return support_from_vertices(b_shard_polytope(beta), FanFrame("B", beta.n))


def b_dimension(beta: BArc) -> int:
    return affine_dim(b_shard_polytope(beta).vertices)


def expected_dimension(beta: BArc) -> int:
    r = beta.rep
    return r.b - r.a if beta.cls == SEPARATED else r.b


def b_shard_contains(beta: BArc, x) -> bool:
    """Membership in ``x_a = x_b``, ``x_a >= x_A``, ``x_a <= x_B`` with ``x_{-i} = -x_i``."""
    xs = lambda i: x[i - 1] if i > 0 else -x[-i - 1]
    r = beta.rep
    xa = xs(r.a)
    return xa == xs(r.b) and all(xa >= xs(i) for i in r.A) and all(xa <= xs(i) for i in r.B)


# ---------------------------------------------------------------------------
# Quotientopes


def b_quotientope(ideal: BArcIdeal, weights=None) -> SupportVector:
    """Support of the weighted Minkowski sum of the shard polytopes of the ideal."""
    frame = FanFrame("B", ideal.n)
    arcs = sorted(ideal.barcs)
    w = []
    for beta in arcs:
        c = Fraction(1 if weights is None else weights.get(beta, 1))
        if c <= 0:
            raise NonpositiveWeight(f"weight {c} on {beta}")
        w.append(c)
    return sum_supports([b_shard_support(be) for be in arcs], frame, w)


def verify_cor131(ideal: BArcIdeal, weights=None) -> bool:
    return chamber_partition(b_quotientope(ideal, weights)) == b_congruence_classes(ideal).as_chamber_partition()


@lru_cache(maxsize=None)
def _vertex_tables(n: int) -> np.ndarray:
    tabs = [chamber_vertex_table(b_shard_support(be)) for be in enumerate_b_arcs(n)]
    return np.array([[[int(c) for c in v] for v in t] for t in tabs], dtype=np.int64)


def _mask_rows(masks, k: int) -> np.ndarray:
    return np.array([[m >> j & 1 for j in range(k)] for m in masks], dtype=np.int64)


def verify_cor131_all(n: int) -> tuple:
    """Compare quotientope fans and congruence classes for every B-arc ideal.

    Returns ``(checked, failures)`` where ``failures`` lists ideal masks.
    """
    masks = b_ideal_masks(n)
    k = len(enumerate_b_arcs(n))
    rows = _mask_rows(masks, k)
    fans = _kernels.summed_vertex_partition(_vertex_tables(n), rows)
    edges, labels = _cover_table(n)
    classes = _kernels.contracted_components(len(FanFrame("B", n).chambers), edges, labels, rows)
    bad = [m for m, f, c in zip(masks, fans, classes) if not np.array_equal(f, c)]
    return len(masks), bad


def b_ray_check(ideal: BArcIdeal, R) -> bool:
    """Whether ``1_R`` stays a ray of the quotient fan, by the arc-membership test."""
    n = ideal.n
    R = set(R)
    negR = {-x for x in R}
    present = {x for beta in ideal for x in beta.arcs}
    pts = signed_range(-n, n)
    for a, b in itertools.combinations(pts, 2):
        inner = signed_range(a + 1, b - 1)
        need = None
        if a in R and b in R and not R & set(inner):
            need = SignedArc(a, b, (), inner, n)
        elif a in negR and b in negR and not negR & set(inner):
            need = SignedArc(a, b, inner, (), n)
        elif not {a, b} & (R | negR) and set(inner) <= R | negR:
            need = SignedArc(a, b, [x for x in inner if x in R], [x for x in inner if x in negR], n)
        if need is not None and need not in present:
            return False
    return True


def b_surviving_rays(ideal: BArcIdeal) -> list:
    """Ray keys ``U`` kept by the quotient fan: the membership test is applied to ``-U``.

    Support keys are upper sets of chambers, while the membership test is
    phrased for the opposite signed subset, just as the type A test is
    phrased for complements.
    """
    n = ideal.n
    return [U for U in FanFrame("B", n).keys if b_ray_check(ideal, [-x for x in signed_members(U, n)])]


def b_ray_check_agrees(ideal: BArcIdeal) -> bool:
    return sorted(b_surviving_rays(ideal)) == sorted(facet_directions(b_quotientope(ideal)))


# ---------------------------------------------------------------------------
# Verification reports


def b_walls(n: int):
    """Chamber indices ``(lo, hi)`` of every wall with its B-arc label."""
    arcs = enumerate_b_arcs(n)
    edges, labels = _cover_table(n)
    for (u, v), lab in zip(edges, labels):
        yield int(u), int(v), arcs[lab]


def verify_prop130(beta: BArc, support: SupportVector | None = None) -> WallReport:
    """Walls of the normal fan of ``SP(beta)``: all carry forcing arcs, and all of ``beta`` appear."""
    s = b_shard_support(beta) if support is None else support
    table = chamber_vertex_table(s)
    forced = own = True
    count = 0
    for lo, hi, label in b_walls(beta.n):
        count += 1
        distinct = table[lo] != table[hi]
        if distinct and not b_forces(label, beta):
            forced = False
        if label == beta and not distinct:
            own = False
    return WallReport(beta, forced, own, count)


def b_indecomposability_report(n: int) -> dict:
    """Dimension of the summand space of every type B shard polytope."""
    _cap(n, MAX_N_SWEEP)
    return {beta: summand_space_dim(b_shard_support(beta)) for beta in enumerate_b_arcs(n)}


def _crosses_axis(alpha: SignedArc, allow_origin: bool) -> bool:
    """Whether the arc must change side between two consecutive interior points.

    With ``allow_origin`` a change between the last negative and first
    positive interior point is not counted, since it can happen at the
    origin.  Only singular arcs pass through the origin.
    """
    inner = signed_range(alpha.a + 1, alpha.b - 1)
    A = set(alpha.A)
    for x, y in zip(inner, inner[1:]):
        if (x in A) != (y in A):
            if allow_origin and x < 0 < y:
                continue
            return True
    return False


def _maximal_contracted(ideal: BArcIdeal) -> list:
    rest = [be for be in enumerate_b_arcs(ideal.n) if be not in ideal.barcs]
    return [be for be in rest if not any(g != be and b_forces(g, be) for g in rest)]


@dataclass(frozen=True)
class RegularityReport:
    n: int
    ideals: int
    regular: int
    cond_i: int  # premise of (i) holds
    cond_i_regular: int  # premise of (i) holds yet the quotient is regular
    cond_ii: int  # premise of (ii) holds
    cond_ii_irregular: int  # premise of (ii) holds yet the quotient is not regular
    irregular_without_i: int  # not regular although the premise of (i) fails

    def to_json(self) -> dict:
        return dict(self.__dict__)


def b_regularity_experiment(n: int) -> RegularityReport:
    """Tabulate quotient regularity against the two crossing conditions."""
    _cap(n, MAX_N_SWEEP)
    tallies = dict(ideals=0, regular=0, cond_i=0, cond_i_regular=0, cond_ii=0, cond_ii_irregular=0,
                   irregular_without_i=0)
    for ideal in enumerate_b_ideals(n):
        degrees = b_quotient_degrees(b_congruence_classes(ideal))
        regular = len(set(degrees)) <= 1
        maximal = _maximal_contracted(ideal)
        c1 = any(be.cls != SINGULAR and _crosses_axis(be.rep, False) for be in maximal)
        c2 = not any(_crosses_axis(be.rep, be.cls == SINGULAR) for be in maximal)
        tallies["ideals"] += 1
        tallies["regular"] += regular
        tallies["cond_i"] += c1
        tallies["cond_i_regular"] += c1 and regular
        tallies["cond_ii"] += c2
        tallies["cond_ii_irregular"] += c2 and not regular
        tallies["irregular_without_i"] += (not c1) and not regular
    return RegularityReport(n, **tallies)


def signed_subset_key(R, n: int) -> int:
    return signed_key(R, n)
