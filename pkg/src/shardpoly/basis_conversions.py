"""Coordinates on caged virtual deformed permutahedra.

Three families of parameters are indexed by the subsets ``I`` of ``[n]``
with at least two elements:

* ``s``: coefficients on the translated shard polytopes
  ``SP(alpha_I) + 1_{B_I ∪ {b_I}}``,
* ``y``: coefficients on the simplices ``Delta_J``,
* ``z``: inner heights ``z_R = min <1_R, x>`` of a caged polytope.

A polytope is caged when every coordinate has minimum zero.  Subsets are
stored as sorted tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix

from shardpoly.polytope_core import (
    FanFrame,
    SupportVector,
    VPolytope,
    is_deformed_permutahedron,
    members,
    polytope_support,
    support_from_vertices,
    translate,
)
from shardpoly.shards_a import shard_support
from shardpoly.weak_order_a import Arc


class NotDeformedPermutahedron(ValueError):
    pass


class NotCaged(ValueError):
    pass


BASES = ("s", "y", "z")


def subset_order_key(I) -> tuple:
    """Order by ``(max - min, -|I|)`` and then lexicographically."""
    return (max(I) - min(I), -len(I), tuple(I))


@lru_cache(maxsize=None)
def canonical_keys(n: int) -> tuple:
    keys = []
    for k in range(2, n + 1):
        keys.extend(itertools.combinations(range(1, n + 1), k))
    return tuple(sorted(keys, key=subset_order_key))


def key_text(I) -> str:
    return ",".join(map(str, I))


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients in one basis; absent keys are zero."""

    basis: str
    n: int
    entries: tuple  # canonical-order (key, Fraction) pairs, zeros dropped

    @classmethod
    def from_dict(cls, basis: str, n: int, d) -> "CoeffVector":
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for key, v in d.items():
            key = tuple(sorted(key))
            if len(key) < 2 or key[0] < 1 or key[-1] > n:
                raise ValueError(f"bad key {key} for n={n}")
            if Fraction(v) != 0:
                clean[key] = Fraction(v)
        entries = tuple((k, clean[k]) for k in canonical_keys(n) if k in clean)
        return cls(basis, n, entries)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, key) -> Fraction:
        return self.as_dict().get(tuple(sorted(key)), Fraction(0))

    def vector(self) -> list:
        d = self.as_dict()
        return [d.get(k, Fraction(0)) for k in canonical_keys(self.n)]

    def to_json(self) -> dict:
        from shardpoly.polytope_core import frac_text

        return {"basis": self.basis, "n": self.n, "entries": {key_text(k): frac_text(v) for k, v in self.entries}}

    @classmethod
    def from_json(cls, data: dict) -> "CoeffVector":
        entries = {tuple(int(t) for t in k.split(",")): Fraction(v) for k, v in data["entries"].items()}
        return cls.from_dict(data["basis"], int(data["n"]), entries)


def unit(basis: str, n: int, I) -> CoeffVector:
    return CoeffVector.from_dict(basis, n, {tuple(I): 1})


# ---------------------------------------------------------------------------
# Subsets and arcs


def arc_of_subset(I, n: int | None = None) -> Arc:
    """``(min I, max I, I ∩ ]min, max[, ]min, max[ - I)``."""
    I = sorted(I)
    a, b = I[0], I[-1]
    inner = range(a + 1, b)
    return Arc(a, b, tuple(i for i in inner if i in I), tuple(i for i in inner if i not in I), n or b)


def subset_of_arc(alpha: Arc) -> tuple:
    return tuple(sorted((alpha.a, alpha.b) + alpha.A))


def triangle(I, J) -> bool:
    """``I ▷ J``: the extremes of ``J`` avoid ``I`` inside its span and ``I`` meets ``J``'s span inside ``J``."""
    I, J = set(I), set(J)
    lo, hi = min(I), max(I)
    pivots = {x for x in range(lo + 1, hi) if x not in I} | {lo, hi}
    jlo, jhi = min(J), max(J)
    if not {jlo, jhi} <= pivots:
        return False
    return all(x in J for x in I if jlo < x < jhi)


def weight(J, I) -> int:
    """``|J|_I``: elements of ``J`` that are neither extremes of ``J`` nor in ``I``."""
    J = set(J)
    return len(J - {min(J), max(J)} - set(I))


def translated_shard_support(I, n: int) -> SupportVector:
    alpha = arc_of_subset(I, n)
    shift = [0] * n
    for i in alpha.right:
        shift[i - 1] = 1
    return translate(shard_support(alpha), shift)


def simplex_support(J, n: int) -> SupportVector:
    pts = []
    for j in J:
        p = [0] * n
        p[j - 1] = 1
        pts.append(tuple(p))
    return polytope_support(pts, FanFrame("A", n))


# ---------------------------------------------------------------------------
# Conversions


def _check(c: CoeffVector, basis: str):
    if c.basis != basis:
        raise ValueError(f"expected basis {basis}, got {c.basis}")


def s_to_y(s: CoeffVector) -> CoeffVector:
    _check(s, "s")
    y = {}
    for I, v in s.entries:
        for J in canonical_keys(s.n):
            if triangle(I, J):
                y[J] = y.get(J, 0) + (-1) ** weight(J, I) * v
    return CoeffVector.from_dict("y", s.n, y)


def y_to_s(y: CoeffVector) -> CoeffVector:
    _check(y, "y")
    s = {}
    for J, v in y.entries:
        for I in canonical_keys(y.n):
            if triangle(J, I):
                e = len({min(I), max(I)} & {min(J), max(J)})
                s[I] = s.get(I, 0) + (-1) ** e * v
    return CoeffVector.from_dict("s", y.n, s)


def y_to_z(y: CoeffVector) -> CoeffVector:
    _check(y, "y")
    z = {}
    for R in canonical_keys(y.n):
        Rs = set(R)
        z[R] = sum((v for J, v in y.entries if set(J) <= Rs), Fraction(0))
    return CoeffVector.from_dict("z", y.n, z)


def z_to_y(z: CoeffVector) -> CoeffVector:
    _check(z, "z")
    d = z.as_dict()
    y = {}
    for J in canonical_keys(z.n):
        total = Fraction(0)
        for k in range(2, len(J) + 1):
            for R in itertools.combinations(J, k):
                total += (-1) ** (len(J) - k) * d.get(R, 0)
        y[J] = total
    return CoeffVector.from_dict("y", z.n, y)


def m_count(I, R) -> int:
    """Pairs ``r < s`` of ``R ∩ (]min I, max I[ Δ I)`` with ``]r, s[ ∩ I = ]r, s[ ∩ R``."""
    I, R = set(I), set(R)
    lo, hi = min(I), max(I)
    pts = sorted(x for x in R if x in (lo, hi) or (lo < x < hi and x not in I))
    count = 0
    for r, s in itertools.combinations(pts, 2):
        if all((x in I) == (x in R) for x in range(r + 1, s)):
            count += 1
    return count


def s_to_z(s: CoeffVector) -> CoeffVector:
    _check(s, "s")
    z = {}
    for R in canonical_keys(s.n):
        z[R] = sum((m_count(I, R) * v for I, v in s.entries), Fraction(0))
    return CoeffVector.from_dict("z", s.n, z)


def _sym(I, lo: int, hi: int):
    return set(I) ^ set(range(lo, hi + 1))


def z_to_s(z: CoeffVector) -> CoeffVector:
    """Four-term formula with ``z_R = 0`` whenever ``|R| <= 1``."""
    _check(z, "z")
    n = z.n
    d = z.as_dict()
    get = lambda R: d.get(tuple(sorted(R)), Fraction(0)) if len(R) >= 2 else Fraction(0)
    s = {}
    for I in canonical_keys(n):
        lo, hi = min(I), max(I)
        left = _sym(I, 1, lo)
        right = _sym(I, hi, n)
        both = set(I) ^ set(range(1, lo + 1)) ^ set(range(hi, n + 1))
        s[I] = get(set(I)) - get(left) - get(right) + get(both)
    return CoeffVector.from_dict("s", n, s)


_PATHS = {
    ("s", "y"): [s_to_y],
    ("y", "s"): [y_to_s],
    ("y", "z"): [y_to_z],
    ("z", "y"): [z_to_y],
    ("s", "z"): [s_to_z],
    ("z", "s"): [z_to_s],
}


def convert(c: CoeffVector, target: str) -> CoeffVector:
    if c.basis == target:
        return c
    for f in _PATHS[(c.basis, target)]:
        c = f(c)
    return c


# ---------------------------------------------------------------------------
# Matrices


_MATRIX = {"y_of_s": ("s", s_to_y), "s_of_y": ("y", y_to_s), "z_of_s": ("s", s_to_z), "s_of_z": ("z", z_to_s)}


def build_matrix(which: str, n: int):
    """Matrix ``M`` with ``target = M · source`` over the canonical key order.

    Returns ``(keys, rows)`` with rows of Fractions.
    """
    source, f = _MATRIX[which]
    keys = canonical_keys(n)
    cols = [f(unit(source, n, K)).vector() for K in keys]
    rows = [[cols[j][i] for j in range(len(keys))] for i in range(len(keys))]
    return keys, rows


def sympy_matrix(rows) -> Matrix:
    return Matrix([[int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in r] for r in rows])


# ---------------------------------------------------------------------------
# Polytopes


@dataclass(frozen=True)
class Realization:
    support: SupportVector
    virtual: bool


def support_from_z(z: CoeffVector) -> SupportVector:
    """Outer support ``s(U) = z_[n] - z_([n] - U)`` of the caged polytope with inner heights ``z``."""
    _check(z, "z")
    n = z.n
    frame = FanFrame("A", n)
    d = z.as_dict()
    full = tuple(range(1, n + 1))
    total = d.get(full, Fraction(0))
    vals = {}
    for U in frame.keys:
        rest = tuple(i for i in full if not U >> (i - 1) & 1)
        vals[U] = total - (d.get(rest, Fraction(0)) if len(rest) >= 2 else 0)
    return SupportVector.from_dict(frame, vals)


def realize(c: CoeffVector) -> Realization:
    """Support of the caged (virtual) polytope with the given coordinates.

    The result is flagged virtual when the heights fail submodularity.
    """
    s = support_from_z(convert(c, "z"))
    return Realization(s, not is_deformed_permutahedron(s))


def inner_heights(s: SupportVector) -> dict:
    """``z_R = min <1_R, x>`` for every nonempty ``R``, keyed by sorted tuples."""
    d = s.as_dict()
    n = s.frame.n
    full = (1 << n) - 1
    out = {}
    for R in s.frame.keys:
        out[members(R)] = d[full] - (d[full ^ R] if full ^ R else 0)
    return out


def cage(s: SupportVector) -> SupportVector:
    z = inner_heights(s)
    return translate(s, [-z[(i,)] for i in range(1, s.frame.n + 1)])


def is_caged(s: SupportVector) -> bool:
    z = inner_heights(s)
    return all(z[(i,)] == 0 for i in range(1, s.frame.n + 1))


def decompose(P, target: str = "s", auto_cage: bool = True) -> CoeffVector:
    """Unique coordinates of a caged deformed permutahedron.

    ``P`` is a type A :class:`SupportVector`, a :class:`VPolytope` or a
    list of points.
    """
    if not isinstance(P, SupportVector):
        pts = P.vertices if isinstance(P, VPolytope) else P
        n = len(next(iter(pts)))
        P = support_from_vertices(list(pts), FanFrame("A", n))
    if not is_deformed_permutahedron(P):
        raise NotDeformedPermutahedron("heights are not submodular")
    if not is_caged(P):
        if not auto_cage:
            raise NotCaged("some coordinate minimum is nonzero")
        P = cage(P)
    z = {R: v for R, v in inner_heights(P).items() if len(R) >= 2}
    return convert(CoeffVector.from_dict("z", P.frame.n, z), target)


def singleton_translation(P: SupportVector) -> tuple:
    """Translation removed by caging: the coordinate minima."""
    z = inner_heights(P)
    return tuple(z[(i,)] for i in range(1, P.frame.n + 1))


# ---------------------------------------------------------------------------
# Closed forms


def permutahedron_s(n: int) -> CoeffVector:
    """``s_I = (min I - 2)(n - max I - 1)``."""
    return CoeffVector.from_dict("s", n, {I: (min(I) - 2) * (n - max(I) - 1) for I in canonical_keys(n)})


def all_pairs_y(n: int) -> CoeffVector:
    return CoeffVector.from_dict("y", n, {I: 1 for I in canonical_keys(n) if len(I) == 2})


def cambrian_y(alpha: Arc) -> CoeffVector:
    """Simplex coordinates of the caged sum of the shard polytopes of all arcs forcing ``alpha``.

    Nonzero only when ``A`` meets the span of ``J`` inside ``J``; the
    magnitude counts the free choices of endpoints outside ``A``:
    ``b - max J + 1`` when ``max J`` is not in ``A`` and ``min J - a + 1``
    when ``min J`` is not in ``A``.  The sign is ``(-1)^{|J|_A}``.
    """
    a, b, A = alpha.a, alpha.b, set(alpha.A)
    y = {}
    for J in canonical_keys(alpha.n):
        lo, hi = min(J), max(J)
        if lo < a or hi > b:
            continue
        if not all(x in J for x in A if lo < x < hi):
            continue
        mag = 1
        if hi not in A:
            mag *= b - hi + 1
        if lo not in A:
            mag *= lo - a + 1
        y[J] = (-1) ** weight(J, A) * mag
    return CoeffVector.from_dict("y", alpha.n, y)
