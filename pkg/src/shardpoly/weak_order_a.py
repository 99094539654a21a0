"""Type A combinatorics of the weak order.

Permutations are tuples of the values ``1..n``.  An arc ``(a, b, A, B)``
joins the points ``a < b`` of ``[n]`` and passes above the points of ``A``
and below the points of ``B``.  Arc ideals are the upper ideals of the
forcing order; they are stored as the set of arcs left uncontracted by the
corresponding lattice congruence.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field


class InvalidArc(ValueError):
    pass


class InvalidDiagram(ValueError):
    pass


class NotADescent(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Arc:
    """Arc ``(a, b, A, B)`` on ``[n]`` with ``A`` and ``B`` partitioning ``]a, b[``."""

    a: int
    b: int
    A: tuple = ()
    B: tuple = ()
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(sorted(self.A)))
        object.__setattr__(self, "B", tuple(sorted(self.B)))
        if self.n == 0:
            object.__setattr__(self, "n", self.b)
        self._validate()

    def _validate(self):
        if not 1 <= self.a < self.b <= self.n:
            raise InvalidArc(f"bad endpoints {self.a}, {self.b} for n={self.n}")
        if set(self.A) & set(self.B):
            raise InvalidArc("A and B intersect")
        if set(self.A) | set(self.B) != set(range(self.a + 1, self.b)):
            raise InvalidArc("A and B must partition the open interval")

    @property
    def interior(self) -> range:
        return range(self.a + 1, self.b)

    @property
    def left(self) -> tuple:
        """The points ``{a} ∪ A`` allowed as left ends of matching pairs."""
        return (self.a,) + self.A

    @property
    def right(self) -> tuple:
        """The points ``B ∪ {b}`` allowed as right ends of matching pairs."""
        return self.B + (self.b,)

    def is_up(self) -> bool:
        return len(self.B) == 0

    def is_down(self) -> bool:
        return len(self.A) == 0

    def with_n(self, n: int) -> "Arc":
        return type(self)(self.a, self.b, self.A, self.B, n)

    def __str__(self):
        return format_arc(self)


@dataclass(frozen=True, order=True)
class PseudoArc(Arc):
    """Arc whose interior points may also avoid both ``A`` and ``B``.

    The free points of ``]a, b[`` are pinned to coordinate zero in the
    associated pseudoshard polytope.
    """

    def _validate(self):
        if not 1 <= self.a < self.b <= self.n:
            raise InvalidArc(f"bad endpoints {self.a}, {self.b} for n={self.n}")
        if set(self.A) & set(self.B):
            raise InvalidArc("A and B intersect")
        if not (set(self.A) | set(self.B)) <= set(range(self.a + 1, self.b)):
            raise InvalidArc("A and B must lie in the open interval")


_ARC_RE = re.compile(r"^\s*(-?\d+)-(-?\d+)\|A=([-\d,]*)\|B=([-\d,]*)\s*$")


def _ints(text):
    return tuple(int(t) for t in text.split(",") if t != "")


def parse_arc_fields(text: str):
    """Split the text format ``a-b|A=i,j|B=k`` into ``(a, b, A, B)``."""
    m = _ARC_RE.match(text)
    if m is None:
        raise InvalidArc(f"cannot parse arc {text!r}")
    return int(m.group(1)), int(m.group(2)), _ints(m.group(3)), _ints(m.group(4))


def parse_arc(text: str, n: int) -> Arc:
    a, b, A, B = parse_arc_fields(text)
    return Arc(a, b, A, B, n)


def format_arc(alpha) -> str:
    return "{}-{}|A={}|B={}".format(
        alpha.a, alpha.b, ",".join(map(str, alpha.A)), ",".join(map(str, alpha.B))
    )


def arc_to_dict(alpha: Arc) -> dict:
    return {"a": alpha.a, "b": alpha.b, "A": list(alpha.A), "B": list(alpha.B), "n": alpha.n}


def up_arc(a: int, b: int, n: int) -> Arc:
    return Arc(a, b, tuple(range(a + 1, b)), (), n)


def down_arc(a: int, b: int, n: int) -> Arc:
    return Arc(a, b, (), tuple(range(a + 1, b)), n)


# ---------------------------------------------------------------------------
# Permutations


def all_perms(n: int) -> list:
    """All permutations of ``[n]`` in lexicographic (Lehmer code) order."""
    return list(itertools.permutations(range(1, n + 1)))


def check_perm(sigma) -> tuple:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation")
    return sigma


def inversions(sigma) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def descents(sigma) -> list:
    """Positions ``i`` (1-based) with ``sigma_i > sigma_{i+1}``."""
    return [i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1]]


def ascents(sigma) -> list:
    return [i + 1 for i in range(len(sigma) - 1) if sigma[i] < sigma[i + 1]]


def inverse_perm(sigma) -> tuple:
    inv = [0] * len(sigma)
    for pos, val in enumerate(sigma, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def swap(sigma, i: int) -> tuple:
    """Swap the letters at 1-based positions ``i`` and ``i + 1``."""
    s = list(sigma)
    s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


# ---------------------------------------------------------------------------
# Arcs


def enumerate_arcs(n: int) -> list:
    """All arcs on ``[n]`` ordered by ``(a, b)`` and then by ``A`` as a bitmask."""
    arcs = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            inner = list(range(a + 1, b))
            for mask in range(1 << len(inner)):
                A = tuple(x for k, x in enumerate(inner) if mask >> k & 1)
                B = tuple(x for k, x in enumerate(inner) if not mask >> k & 1)
                arcs.append(Arc(a, b, A, B, n))
    return arcs


def arcs_cross(alpha: Arc, beta: Arc) -> bool:
    """Whether the two arcs cross in their interiors."""
    A, B = set(alpha.A), set(alpha.B)
    A2, B2 = set(beta.A), set(beta.B)
    ends, ends2 = {alpha.a, alpha.b}, {beta.a, beta.b}
    first = (A & B2) | (ends & B2) | (A & ends2)
    second = (B & A2) | (ends & A2) | (B & ends2)
    return bool(first) and bool(second)


def forces(alpha: Arc, beta: Arc) -> bool:
    """Whether ``alpha`` forces ``beta``: nested endpoints and nested sides."""
    return (
        beta.a <= alpha.a < alpha.b <= beta.b
        and set(alpha.A) <= set(beta.A)
        and set(alpha.B) <= set(beta.B)
    )


# ---------------------------------------------------------------------------
# Noncrossing arc diagrams


@dataclass(frozen=True)
class NoncrossingDiagram:
    arcs: frozenset
    color: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        if self.color not in ("up", "down"):
            raise InvalidDiagram(f"unknown color {self.color!r}")

    def validate(self):
        lefts = [al.a for al in self.arcs]
        rights = [al.b for al in self.arcs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise InvalidDiagram("repeated endpoint")
        for al, be in itertools.combinations(self.arcs, 2):
            if arcs_cross(al, be):
                raise InvalidDiagram(f"arcs {al} and {be} cross")

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)


def arc_at(sigma, i: int, color: str = "down") -> Arc:
    """The arc drawn between positions ``i`` and ``i + 1`` of ``sigma``."""
    n = len(sigma)
    x, y = sigma[i - 1], sigma[i]
    lo, hi = min(x, y), max(x, y)
    before = tuple(v for v in sigma[: i - 1] if lo < v < hi)
    after = tuple(v for v in sigma[i + 1:] if lo < v < hi)
    return Arc(lo, hi, before, after, n)


def perm_to_diagram(sigma, color: str = "down") -> NoncrossingDiagram:
    """Arcs over the descents (down) or the ascents (up) of ``sigma``."""
    sigma = check_perm(sigma)
    positions = descents(sigma) if color == "down" else ascents(sigma)
    return NoncrossingDiagram(frozenset(arc_at(sigma, i) for i in positions), color, len(sigma))


def diagram_to_perm(D: NoncrossingDiagram, color: str | None = None) -> tuple:
    """Inverse of :func:`perm_to_diagram` by a linear extension of component priorities."""
    color = color or D.color
    D.validate()
    n = D.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for al in D.arcs:
        parent[find(al.a)] = find(al.b)
    comps = {}
    for x in range(1, n + 1):
        comps.setdefault(find(x), []).append(x)
    preds = {r: set() for r in comps}
    for al in D.arcs:
        Y = find(al.a)
        for x in al.A:
            if find(x) != Y:
                preds[Y].add(find(x))
        for x in al.B:
            if find(x) != Y:
                preds[find(x)].add(Y)
    word, placed = [], set()
    while len(placed) < len(comps):
        ready = [r for r in comps if r not in placed and preds[r] <= placed]
        if not ready:
            raise InvalidDiagram("cyclic priorities")
        if color == "down":
            r = min(ready, key=lambda c: min(comps[c]))
            word.extend(sorted(comps[r], reverse=True))
        else:
            r = max(ready, key=lambda c: max(comps[c]))
            word.extend(sorted(comps[r]))
        placed.add(r)
    return tuple(word)


def arc_to_join_irreducible(alpha: Arc) -> tuple:
    """The permutation ``[1..a-1, A, b, a, B, b+1..n]`` with a single descent."""
    n = alpha.n
    return (
        tuple(range(1, alpha.a)) + alpha.A + (alpha.b, alpha.a) + alpha.B
        + tuple(range(alpha.b + 1, n + 1))
    )


def cover_arc(tau, i: int) -> Arc:
    """Arc labelling the cover obtained by sorting positions ``i``, ``i + 1`` of ``tau``."""
    tau = tuple(tau)
    if not tau[i - 1] > tau[i]:
        raise NotADescent(f"{tau} has no descent at {i}")
    return arc_at(tau, i)


# ---------------------------------------------------------------------------
# Arc ideals


@dataclass(frozen=True)
class ArcIdeal:
    """Set of arcs closed under being forced: ``alpha`` in and ``beta`` forces ``alpha`` gives ``beta`` in."""

    arcs: frozenset
    n: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))

    def __contains__(self, alpha):
        return alpha in self.arcs

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(sorted(self.arcs))

    def is_closed(self) -> bool:
        return all(
            beta in self.arcs
            for alpha in self.arcs
            for beta in enumerate_arcs(self.n)
            if forces(beta, alpha)
        )

    def minimal_arcs(self) -> list:
        """Arcs of the ideal forcing no other arc of the ideal."""
        return [
            al for al in sorted(self.arcs)
            if not any(be != al and forces(al, be) for be in self.arcs)
        ]


def close_upward(seed, n: int) -> ArcIdeal:
    """Smallest arc ideal containing ``seed``."""
    seed = list(seed)
    out = {beta for beta in enumerate_arcs(n) if any(forces(beta, al) for al in seed)}
    return ArcIdeal(frozenset(out), n)


def cambrian_ideal(alpha: Arc) -> ArcIdeal:
    return close_upward([alpha], alpha.n)


def sylvester_ideal(n: int) -> ArcIdeal:
    return ArcIdeal(frozenset(al for al in enumerate_arcs(n) if al.is_up()), n)


def full_ideal(n: int) -> ArcIdeal:
    return ArcIdeal(frozenset(enumerate_arcs(n)), n)


def forcing_masks(arcs) -> list:
    """For each arc, the bitmask of the other arcs forcing it."""
    out = []
    for j, al in enumerate(arcs):
        m = 0
        for i, be in enumerate(arcs):
            if i != j and forces(be, al):
                m |= 1 << i
        out.append(m)
    return out


def enumerate_ideal_masks(arcs, forcing) -> list:
    """All upper ideals as bitmasks over ``arcs``, given each arc's forcer mask.

    Arcs are decided shortest first, so every forcer of an arc is decided
    before the arc itself; an arc may be added only when all its forcers
    are already in.
    """
    from shardpoly import _kernels

    order = sorted(range(len(arcs)), key=lambda k: (arcs[k].b - arcs[k].a, k))
    return _kernels.enumerate_upper_sets(order, forcing)


def enumerate_arc_ideals(n: int):
    """Yield every arc ideal of ``[n]`` once, ordered by size then bitmask."""
    arcs = enumerate_arcs(n)
    masks = enumerate_ideal_masks(arcs, forcing_masks(arcs))
    for m in sorted(masks, key=lambda m: (bin(m).count("1"), m)):
        yield ArcIdeal(frozenset(arcs[k] for k in range(len(arcs)) if m >> k & 1), n)


# ---------------------------------------------------------------------------
# Congruence classes


@dataclass(frozen=True)
class CongruencePartition:
    n: int
    classes: tuple
    class_min: tuple
    # Orientation of the permutahedron graph used for the weak order.
    orientation: tuple = field(default=())

    def class_of(self, sigma) -> int:
        sigma = tuple(sigma)
        for k, cl in enumerate(self.classes):
            if sigma in cl:
                return k
        raise KeyError(sigma)

    def as_blocks(self) -> frozenset:
        return frozenset(frozenset(cl) for cl in self.classes)


def weak_order_covers(n: int):
    """Pairs ``(sigma, tau, i)`` with ``tau`` covering ``sigma`` by sorting positions ``i, i+1``."""
    for tau in all_perms(n):
        for i in descents(tau):
            yield swap(tau, i), tau, i


def congruence_classes(ideal: ArcIdeal) -> CongruencePartition:
    """Components of the weak order after contracting every cover labelled outside ``ideal``."""
    n = ideal.n
    perms = all_perms(n)
    index = {p: k for k, p in enumerate(perms)}
    parent = list(range(len(perms)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma, tau, i in weak_order_covers(n):
        if cover_arc(tau, i) not in ideal.arcs:
            parent[find(index[sigma])] = find(index[tau])
    groups = {}
    for k, p in enumerate(perms):
        groups.setdefault(find(k), []).append(p)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    mins = tuple(min(cl, key=inversions) for cl in classes)
    gamma = tuple(2 * i - n - 1 for i in range(1, n + 1))
    return CongruencePartition(n, tuple(classes), mins, gamma)


def pi_down(sigma, ideal: ArcIdeal) -> tuple:
    """Minimal permutation of the congruence class of ``sigma``."""
    part = congruence_classes(ideal)
    return part.class_min[part.class_of(sigma)]


def pi_down_by_diagram(sigma, ideal: ArcIdeal) -> tuple:
    """Same projection read off the down diagram restricted to ideal arcs."""
    D = perm_to_diagram(sigma, "down")
    kept = NoncrossingDiagram(frozenset(al for al in D.arcs if al in ideal.arcs), "down", D.n)
    return diagram_to_perm(kept)


def is_interval(block, n: int) -> bool:
    """Whether a set of permutations is an interval of the weak order."""
    block = set(block)
    lo = min(block, key=inversions)
    hi = max(block, key=inversions)
    inv_lo, inv_hi = _inv_set(lo), _inv_set(hi)
    interval = {p for p in all_perms(n) if inv_lo <= _inv_set(p) <= inv_hi}
    return interval == block


def _inv_set(sigma) -> frozenset:
    pos = inverse_perm(sigma)
    n = len(sigma)
    return frozenset(
        (x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1) if pos[x - 1] > pos[y - 1]
    )


def quotient_degrees(part: CongruencePartition) -> list:
    """Degree of every class in the Hasse diagram of the quotient."""
    n = part.n
    where = {p: k for k, cl in enumerate(part.classes) for p in cl}
    nbrs = [set() for _ in part.classes]
    for sigma, tau, _ in weak_order_covers(n):
        x, y = where[sigma], where[tau]
        if x != y:
            nbrs[x].add(y)
            nbrs[y].add(x)
    return [len(s) for s in nbrs]


def regularity_check(ideal: ArcIdeal) -> tuple:
    """Regularity of the quotient: ``(by degrees, by the maximal-arc criterion)``."""
    degrees = quotient_degrees(congruence_classes(ideal))
    direct = len(set(degrees)) <= 1
    rest = [al for al in enumerate_arcs(ideal.n) if al not in ideal.arcs]
    maximal = [al for al in rest if not any(be != al and forces(be, al) for be in rest)]
    criterion = all(al.is_up() or al.is_down() for al in maximal)
    return direct, criterion
