"""Exact polytopes whose normal fans coarsen the braid fan or the type B Coxeter fan.

A polytope is represented by its support vector: the values
``s(U) = max <1_U, x>`` over the rays ``1_U`` of the fan, where ``U`` is an
upper set of a chamber.  In type A the key ``[n]`` stores the coordinate
sum.  In type B, ``U`` is a signed subset and ``e_{-i} = -e_i``.

Keys are integers: a type A subset ``U`` is its bitmask, and a signed
subset with positive part ``P`` and negative part ``N`` is
``mask(P) | mask(N) << n``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from shardpoly import _kernels

MAX_N_A = 8
MAX_N_B = 5


class SizeCapExceeded(ValueError):
    pass


class NotTight(ValueError):
    pass


class FrameMismatch(ValueError):
    pass


class NegativeScale(ValueError):
    pass


class NotAnEdge(ValueError):
    pass


# ---------------------------------------------------------------------------
# Subset keys


def mask_of(items) -> int:
    m = 0
    for i in items:
        m |= 1 << (i - 1)
    return m


def members(mask: int) -> tuple:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def signed_key(items, n: int) -> int:
    """Key of a signed subset given as nonzero integers."""
    pos = neg = 0
    for i in items:
        if i > 0:
            pos |= 1 << (i - 1)
        else:
            neg |= 1 << (-i - 1)
    if pos & neg:
        raise ValueError(f"{sorted(items)} contains both i and -i")
    return pos | neg << n


def signed_members(key: int, n: int) -> tuple:
    full = (1 << n) - 1
    pos, neg = key & full, key >> n
    return tuple(sorted([-i for i in members(neg)] + list(members(pos))))


def key_to_text(key: int, frame: "FanFrame") -> str:
    if frame.kind == "A":
        return ",".join(map(str, members(key)))
    return ",".join(map(str, signed_members(key, frame.n)))


def text_to_key(text: str, frame: "FanFrame") -> int:
    items = [int(t) for t in text.split(",") if t.strip()]
    if frame.kind == "A":
        return mask_of(items)
    return signed_key(items, frame.n)


def dot_key(key: int, x, frame: "FanFrame"):
    """``<1_U, x>`` for the ray of key ``U``."""
    n = frame.n
    total = 0
    for i in range(n):
        if key >> i & 1:
            total += x[i]
        if frame.kind == "B" and key >> (i + n) & 1:
            total -= x[i]
    return total


# ---------------------------------------------------------------------------
# Fan frames


def signed_perms(n: int) -> list:
    """All signed permutations ``sigma_1 ... sigma_n`` in a fixed order."""
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(tuple(s * v for s, v in zip(signs, p)))
    return out


@dataclass(frozen=True)
class FanFrame:
    """The braid fan (``kind='A'``) or the type B Coxeter fan (``kind='B'``) of rank ``n``."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(self.kind)
        cap = MAX_N_A if self.kind == "A" else MAX_N_B
        if not 1 <= self.n <= cap:
            raise SizeCapExceeded(f"type {self.kind} is capped at n <= {cap}")

    @property
    def chambers(self) -> list:
        return _chambers(self.kind, self.n)

    @property
    def keys(self) -> list:
        return _keys(self.kind, self.n)

    def chamber_rays(self, sigma) -> list:
        """Keys of the upper sets ``sigma([k, n])`` for ``k = 1..n``."""
        if self.kind == "A":
            return [mask_of(sigma[k:]) for k in range(self.n)]
        return [signed_key(sigma[k:], self.n) for k in range(self.n)]

    def proper_keys(self) -> list:
        """Ray directions of the fan (all keys but the sum direction in type A)."""
        if self.kind == "A":
            full = (1 << self.n) - 1
            return [k for k in self.keys if k != full]
        return list(self.keys)

    @property
    def slice_dim(self) -> int:
        return self.n - 1 if self.kind == "A" else self.n

    def key_size(self) -> int:
        return 1 << self.n if self.kind == "A" else 1 << (2 * self.n)

    def adjacent_chambers(self) -> list:
        """Pairs of chamber indices sharing a wall."""
        return _adjacent(self.kind, self.n)

    def arrays(self):
        """Integer tables ``(rays, coords, signs)`` for the vectorised vertex solve."""
        return _arrays(self.kind, self.n)


@lru_cache(maxsize=None)
def _chambers(kind, n):
    if kind == "A":
        return list(itertools.permutations(range(1, n + 1)))
    return signed_perms(n)


@lru_cache(maxsize=None)
def _keys(kind, n):
    if kind == "A":
        return list(range(1, 1 << n))
    out = []
    for pos in range(1 << n):
        for neg in range(1 << n):
            if pos & neg == 0 and (pos | neg):
                out.append(pos | neg << n)
    return sorted(out)


@lru_cache(maxsize=None)
def _adjacent(kind, n):
    chambers = _chambers(kind, n)
    index = {c: k for k, c in enumerate(chambers)}
    pairs = []
    for k, c in enumerate(chambers):
        for i in range(n - 1):
            d = list(c)
            d[i], d[i + 1] = d[i + 1], d[i]
            j = index[tuple(d)]
            if k < j:
                pairs.append((k, j))
        if kind == "B":
            d = (-c[0],) + tuple(c[1:])
            j = index[d]
            if k < j:
                pairs.append((k, j))
    return pairs


@lru_cache(maxsize=None)
def _arrays(kind, n):
    frame = FanFrame(kind, n)
    chambers = frame.chambers
    rays = np.array([frame.chamber_rays(c) for c in chambers], dtype=np.int64)
    coords = np.array([[abs(v) - 1 for v in c] for c in chambers], dtype=np.int64)
    signs = np.array([[1 if v > 0 else -1 for v in c] for c in chambers], dtype=np.int64)
    return rays, coords, signs


# ---------------------------------------------------------------------------
# Support vectors and vertex lists


@dataclass(frozen=True)
class VPolytope:
    """Deduplicated, lexicographically sorted vertex list with exact coordinates."""

    n: int
    vertices: tuple

    @classmethod
    def from_points(cls, points, n: int | None = None) -> "VPolytope":
        pts = sorted({tuple(Fraction(c) for c in p) for p in points})
        if n is None:
            n = len(pts[0])
        return cls(n, tuple(pts))

    def __len__(self):
        return len(self.vertices)

    def translate(self, t) -> "VPolytope":
        return VPolytope.from_points([tuple(x + y for x, y in zip(p, t)) for p in self.vertices], self.n)


@dataclass(frozen=True)
class SupportVector:
    frame: FanFrame
    values: tuple  # sorted (key, Fraction) pairs

    @classmethod
    def from_dict(cls, frame: FanFrame, d) -> "SupportVector":
        return cls(frame, tuple(sorted((k, Fraction(d.get(k, 0))) for k in frame.keys)))

    def as_dict(self) -> dict:
        return dict(self.values)

    def __getitem__(self, key):
        if key == 0:
            return Fraction(0)
        return self.as_dict()[key]

    def __add__(self, other: "SupportVector") -> "SupportVector":
        return minkowski_sum(self, other)

    def __eq__(self, other):
        return isinstance(other, SupportVector) and self.frame == other.frame and self.values == other.values

    def __hash__(self):
        return hash((self.frame, self.values))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, v in self.values)

    def to_array(self) -> np.ndarray:
        """Integer array indexed by key (only for integral supports)."""
        arr = np.zeros(self.frame.key_size(), dtype=np.int64)
        for k, v in self.values:
            if v.denominator != 1:
                raise ValueError("support is not integral")
            arr[k] = int(v)
        return arr


def support_from_vertices(V, frame: FanFrame) -> SupportVector:
    """Direct maxima of ``<1_U, x>`` over the points of ``V``."""
    pts = V.vertices if isinstance(V, VPolytope) else list(V)
    d = {k: max(dot_key(k, p, frame) for p in pts) for k in frame.keys}
    return SupportVector.from_dict(frame, d)


def chamber_vertex(s: SupportVector, sigma) -> tuple:
    frame = s.frame
    d = s.as_dict()
    rays = frame.chamber_rays(sigma)
    x = [Fraction(0)] * frame.n
    for k in range(frame.n):
        val = d[rays[k]] - (d[rays[k + 1]] if k + 1 < frame.n else 0)
        v = sigma[k]
        x[abs(v) - 1] = val if v > 0 else -val
    return tuple(x)


def chamber_vertex_table(s: SupportVector) -> list:
    """Vertex selected by every chamber, in chamber order."""
    if s.is_integral():
        rays, coords, signs = s.frame.arrays()
        tab = _kernels.chamber_vertices(s.to_array(), rays, coords, signs, s.frame.n)
        return [tuple(Fraction(int(c)) for c in row) for row in tab]
    return [chamber_vertex(s, c) for c in s.frame.chambers]


def vertices_from_support(s: SupportVector, check: bool = True) -> VPolytope:
    """Vertices by a triangular solve in every chamber, validated against ``s``."""
    V = VPolytope.from_points(chamber_vertex_table(s), s.frame.n)
    if check and support_from_vertices(V, s.frame) != s:
        raise NotTight("support vector is not tight for this fan")
    return V


def is_tight(s: SupportVector) -> bool:
    try:
        vertices_from_support(s)
    except NotTight:
        return False
    return True


def is_deformed_permutahedron(s: SupportVector) -> bool:
    """Submodularity ``s(R) + s(S) >= s(R | S) + s(R & S)`` in type A; tightness in type B."""
    if s.frame.kind == "B":
        return is_tight(s)
    d = s.as_dict()
    d[0] = Fraction(0)
    keys = [0] + s.frame.keys
    for R in keys:
        for S in keys:
            if R < S and d[R] + d[S] < d[R | S] + d[R & S]:
                return False
    return True


def polytope_support(points, frame: FanFrame) -> SupportVector:
    return support_from_vertices(VPolytope.from_points(points, frame.n), frame)


def hull_vertices(points, frame: FanFrame) -> VPolytope:
    """Vertices of the hull of ``points`` when that hull is a deformed permutahedron of ``frame``."""
    return vertices_from_support(polytope_support(points, frame))


def _same_frame(s1, s2):
    if s1.frame != s2.frame:
        raise FrameMismatch(f"{s1.frame} vs {s2.frame}")


def minkowski_sum(s1: SupportVector, s2: SupportVector) -> SupportVector:
    _same_frame(s1, s2)
    return SupportVector(s1.frame, tuple((k, v + w) for (k, v), (_, w) in zip(s1.values, s2.values)))


def sum_supports(supports, frame: FanFrame, weights=None) -> SupportVector:
    acc = {k: Fraction(0) for k in frame.keys}
    for idx, s in enumerate(supports):
        w = Fraction(1) if weights is None else Fraction(weights[idx])
        for k, v in s.values:
            acc[k] += w * v
    return SupportVector.from_dict(frame, acc)


def scale(s: SupportVector, lam) -> SupportVector:
    lam = Fraction(lam)
    if lam < 0:
        raise NegativeScale(str(lam))
    return SupportVector(s.frame, tuple((k, lam * v) for k, v in s.values))


def translate(s: SupportVector, t) -> SupportVector:
    return SupportVector(s.frame, tuple((k, v + dot_key(k, t, s.frame)) for k, v in s.values))


def point_support(p, frame: FanFrame) -> SupportVector:
    return support_from_vertices([tuple(Fraction(c) for c in p)], frame)


def permutahedron_support(frame: FanFrame) -> SupportVector:
    """Support of ``Perm_n`` (type A) or of the type B permutahedron."""
    n = frame.n
    if frame.kind == "A":
        pts = [tuple(p.index(i) + 1 for i in range(1, n + 1)) for p in frame.chambers]
        return polytope_support(pts, frame)
    pts = []
    for sigma in frame.chambers:
        x = [0] * n
        for i, v in enumerate(sigma, start=1):
            x[abs(v) - 1] = i if v > 0 else -i
        pts.append(tuple(x))
    return polytope_support(pts, frame)


# ---------------------------------------------------------------------------
# Fans as chamber partitions


@dataclass(frozen=True)
class ChamberPartition:
    frame: FanFrame
    blocks: frozenset  # frozenset of frozensets of chamber words

    def labels(self) -> list:
        where = {}
        for k, b in enumerate(sorted(self.blocks, key=lambda b: min(b))):
            for c in b:
                where[c] = k
        return [where[c] for c in self.frame.chambers]

    def is_connected(self) -> bool:
        chambers = self.frame.chambers
        index = {c: k for k, c in enumerate(chambers)}
        nbrs = {k: set() for k in range(len(chambers))}
        for i, j in self.frame.adjacent_chambers():
            nbrs[i].add(j)
            nbrs[j].add(i)
        for b in self.blocks:
            idx = {index[c] for c in b}
            start = next(iter(idx))
            seen, todo = {start}, [start]
            while todo:
                x = todo.pop()
                for y in nbrs[x] & idx:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            if seen != idx:
                return False
        return True


def partition_from_labels(frame: FanFrame, labels) -> ChamberPartition:
    groups = {}
    for c, lab in zip(frame.chambers, labels):
        groups.setdefault(int(lab), set()).add(c)
    return ChamberPartition(frame, frozenset(frozenset(g) for g in groups.values()))


def chamber_partition(s: SupportVector) -> ChamberPartition:
    """Chambers grouped by the vertex they select."""
    table = chamber_vertex_table(s)
    ids = {}
    labels = [ids.setdefault(v, len(ids)) for v in table]
    return partition_from_labels(s.frame, labels)


def coarsens(p: ChamberPartition, q: ChamberPartition) -> bool:
    """Whether every block of ``q`` lies inside a block of ``p``."""
    if p.frame != q.frame:
        raise FrameMismatch(f"{p.frame} vs {q.frame}")
    where = {c: k for k, b in enumerate(p.blocks) for c in b}
    return all(len({where[c] for c in b}) == 1 for b in q.blocks)


# ---------------------------------------------------------------------------
# Small exact linear algebra


def _rank_rows(rows) -> int:
    """Rank of a short list of rational row vectors by Gaussian elimination."""
    rows = [list(map(Fraction, r)) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                f = f / p[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], p)]
        rank += 1
        col += 1
    return rank


def affine_dim(points) -> int:
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    diffs = [d for d in diffs if any(d)]
    return _rank_rows(diffs) if diffs else 0


def _det(M) -> Fraction:
    M = [list(map(Fraction, r)) for r in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if f:
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def exact_rank(rows) -> int:
    """Rank of a rational matrix (given as rows) over QQ."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    M = DomainMatrix([[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows],
                     (len(rows), len(rows[0])), QQ)
    return M.rank()


# ---------------------------------------------------------------------------
# Faces and facets


def _affine_chart(points):
    """Affine coordinates of ``points`` in a basis of their affine hull."""
    p0 = points[0]
    basis = []
    for p in points[1:]:
        d = [a - b for a, b in zip(p, p0)]
        if _rank_rows(basis + [d]) > len(basis):
            basis.append(d)
    k = len(basis)
    if k == 0:
        return 0, [()] * len(points)
    # Solve p - p0 = sum c_j basis_j through a pivoted system on k columns.
    ncols = len(p0)
    cols = []
    for c in range(ncols):
        if _rank_rows([[b[cc] for b in basis] for cc in cols + [c]]) > len(cols):
            cols.append(c)
        if len(cols) == k:
            break
    sub = [[basis[j][c] for j in range(k)] for c in cols]
    inv = _inverse(sub)
    coords = []
    for p in points:
        rhs = [p[c] - p0[c] for c in cols]
        coords.append(tuple(sum(inv[i][j] * rhs[j] for j in range(k)) for i in range(k)))
    return k, coords


def _inverse(M):
    n = len(M)
    A = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [r[n:] for r in A]


def _normal_through(pts, d):
    """Normal of the hyperplane through ``d`` points of ``Q^d`` (``None`` if degenerate)."""
    p0 = pts[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if d == 1:
        return (Fraction(1),)
    if _rank_rows(rows) < d - 1:
        return None
    # Cofactor expansion gives the normal vector of the d - 1 difference rows.
    normal = []
    for j in range(d):
        minor = [[r[c] for c in range(d) if c != j] for r in rows]
        normal.append((-1) ** j * _det(minor))
    return tuple(normal)


def facets_bruteforce(points) -> list:
    """Vertex index sets of the facets of ``conv(points)`` inside its affine hull."""
    points = [tuple(map(Fraction, p)) for p in points]
    d, coords = _affine_chart(points)
    if d == 0:
        return []
    found = set()
    for combo in itertools.combinations(range(len(points)), d):
        normal = _normal_through([coords[i] for i in combo], d)
        if normal is None:
            continue
        vals = [sum(a * b for a, b in zip(normal, c)) for c in coords]
        h = vals[combo[0]]
        if all(v <= h for v in vals) or all(v >= h for v in vals):
            on = frozenset(i for i, v in enumerate(vals) if v == h)
            if len(on) < len(points):
                found.add(on)
    return sorted(found, key=sorted)


def extreme_points(points) -> list:
    """Points of the list that are vertices of its convex hull."""
    points = sorted({tuple(map(Fraction, p)) for p in points})
    if len(points) <= 1:
        return points
    d, coords = _affine_chart(points)
    facets = facets_bruteforce(points)
    out = []
    for i, p in enumerate(points):
        containing = [f for f in facets if i in f]
        inter = set(range(len(points)))
        for f in containing:
            inter &= f
        if containing and inter == {i}:
            out.append(p)
    return out


def facet_directions(s: SupportVector) -> list:
    """Ray keys ``U`` whose maximizing face has codimension one in the slice."""
    V = vertices_from_support(s).vertices
    target = s.frame.slice_dim - 1
    d = s.as_dict()
    out = []
    for U in s.frame.proper_keys():
        face = [v for v in V if dot_key(U, v, s.frame) == d[U]]
        if affine_dim(face) == target:
            out.append(U)
    return out


def caged_translate(V: VPolytope) -> VPolytope:
    """Translate so that every coordinate has minimum zero over the vertices."""
    mins = [min(p[i] for p in V.vertices) for i in range(V.n)]
    return V.translate([-m for m in mins])


def summand_space_dim(s: SupportVector) -> int:
    """Dimension of the space of weak Minkowski summands modulo translations."""
    frame = s.frame
    keys = frame.keys
    col = {k: j for j, k in enumerate(keys)}
    table = chamber_vertex_table(s)
    chambers = frame.chambers
    rows = []
    for i, j in frame.adjacent_chambers():
        if table[i] != table[j]:
            continue
        ri = _vertex_rows(frame, chambers[i])
        rj = _vertex_rows(frame, chambers[j])
        for c in range(frame.n):
            row = [0] * len(keys)
            for key, coef in ri[c].items():
                row[col[key]] += coef
            for key, coef in rj[c].items():
                row[col[key]] -= coef
            if any(row):
                rows.append(row)
    rank = exact_rank(rows) if rows else 0
    return len(keys) - rank - frame.n


def _vertex_rows(frame: FanFrame, sigma) -> list:
    """Coordinates of the chamber vertex as linear forms in the support values."""
    rays = frame.chamber_rays(sigma)
    forms = [dict() for _ in range(frame.n)]
    for k in range(frame.n):
        v = sigma[k]
        sgn = 1 if v > 0 else -1
        f = forms[abs(v) - 1]
        f[rays[k]] = f.get(rays[k], 0) + sgn
        if k + 1 < frame.n:
            f[rays[k + 1]] = f.get(rays[k + 1], 0) - sgn
    return forms


def is_indecomposable(s: SupportVector) -> bool:
    return summand_space_dim(s) == 1


def smallest_face(points, subset_idx, facets=None) -> frozenset:
    """Vertex indices of the smallest face containing the given vertices."""
    facets = facets_bruteforce(points) if facets is None else facets
    face = set(range(len(points)))
    for f in facets:
        if set(subset_idx) <= f:
            face &= f
    return frozenset(face)


def mcmullen_check(V, edge) -> bool:
    """Whether every facet of ``V`` contains an endpoint of ``edge``."""
    pts = [tuple(map(Fraction, p)) for p in (V.vertices if isinstance(V, VPolytope) else V)]
    p, q = (tuple(map(Fraction, e)) for e in edge)
    if p not in pts or q not in pts:
        raise NotAnEdge("endpoints are not vertices")
    ip, iq = pts.index(p), pts.index(q)
    facets = facets_bruteforce(pts)
    if smallest_face(pts, (ip, iq), facets) != frozenset((ip, iq)):
        raise NotAnEdge(f"{p} and {q} do not span an edge")
    return all(ip in f or iq in f for f in facets)


# ---------------------------------------------------------------------------
# Volumes


def _project(points, kind: str):
    return [tuple(p[:-1]) if kind == "A" else tuple(p) for p in points]


def _simplex_volume_times_factorial(simplex) -> Fraction:
    p0 = simplex[0]
    return abs(_det([[a - b for a, b in zip(p, p0)] for p in simplex[1:]]))


def volume(V, kind: str = "A", frame: FanFrame | None = None) -> Fraction:
    """Exact volume by recursive pyramid decomposition.

    Type A drops the last coordinate (so that the standard simplex
    ``Delta_[n]`` has volume ``1/(n-1)!``); type B uses the Euclidean
    volume.  Returns zero for input that is not full dimensional in the
    slice.  Facets are found by brute force over vertex subsets, or, when
    ``frame`` is given, by maximizing the ray directions of the fan (every
    face of a deformed permutahedron is cut out by such directions).
    """
    pts = sorted({tuple(map(Fraction, p)) for p in (V.vertices if isinstance(V, VPolytope) else V)})
    proj = _project(pts, kind)
    d = len(proj[0])
    if affine_dim(proj) < d:
        return Fraction(0)
    if frame is not None:
        dirs = frame.proper_keys()

        def facets_of(idx, k):
            out = set()
            for U in dirs:
                vals = [dot_key(U, pts[i], frame) for i in idx]
                m = max(vals)
                face = frozenset(i for i, v in zip(idx, vals) if v == m)
                if len(face) < len(idx) and face not in out and affine_dim([proj[i] for i in face]) == k - 1:
                    out.add(face)
            return out
    else:
        def facets_of(idx, k):
            idx = sorted(idx)
            return {frozenset(idx[j] for j in f) for f in facets_bruteforce([proj[i] for i in idx])}

    memo = {}

    def triangulate(idx, k):
        if k == 0:
            return [(min(idx),)]
        if idx in memo:
            return memo[idx]
        apex = min(idx)
        simplices = []
        for f in facets_of(idx, k):
            if apex in f:
                continue
            for simp in triangulate(f, k - 1):
                simplices.append(simp + (apex,))
        memo[idx] = simplices
        return simplices

    total = Fraction(0)
    for simp in triangulate(frozenset(range(len(pts))), d):
        total += _simplex_volume_times_factorial([proj[i] for i in simp])
    return total / math.factorial(d)


def mixed_volume_oracle(polytopes, kind: str = "A", frame: FanFrame | None = None) -> Fraction:
    """Mixed volume of ``d`` polytopes by exact polynomial interpolation.

    ``Vol(y_1 P_1 + ... + y_d P_d)`` is a homogeneous polynomial of degree
    ``d``.  Its coefficient of ``y_1 ... y_d`` is ``d!`` times the mixed
    volume, and the mixed finite difference over the grid ``{0, 1}^d``
    extracts exactly that coefficient.
    """
    d = len(polytopes)
    pts_list = [[tuple(map(Fraction, p)) for p in (P.vertices if isinstance(P, VPolytope) else P)]
                for P in polytopes]
    n = len(pts_list[0][0])
    total = Fraction(0)
    for ys in itertools.product((0, 1), repeat=d):
        chosen = [pts_list[i] for i in range(d) if ys[i]]
        if not chosen:
            continue
        summed = _minkowski_points(chosen, n, frame)
        sign = (-1) ** (d - sum(ys))
        total += sign * volume(summed, kind, frame)
    return total / math.factorial(d)


def _minkowski_points(point_sets, n, frame):
    acc = [tuple([Fraction(0)] * n)]
    for pts in point_sets:
        acc = {tuple(a + b for a, b in zip(p, q)) for p in acc for q in pts}
        if frame is not None:
            acc = hull_vertices(acc, frame).vertices
        else:
            acc = extreme_points(acc)
    return list(acc)


# ---------------------------------------------------------------------------
# Inner and outer height conventions


def support_convert(s, target: str, frame: FanFrame | None = None):
    """Switch between outer supports and inner heights ``z_R = s([n]) - s([n] - R)``.

    With ``target='inner'`` a type A :class:`SupportVector` becomes a dict of
    inner heights keyed by subset masks; with ``target='outer'`` such a dict
    (plus ``frame``) becomes a :class:`SupportVector` again.  The map is an
    involution on the value level.
    """
    if target == "inner":
        frame = s.frame
        if frame.kind != "A":
            raise ValueError("inner heights are defined in type A")
        d = s.as_dict()
        full = (1 << frame.n) - 1
        return {R: d[full] - (d[full ^ R] if full ^ R else 0) for R in frame.keys}
    if target == "outer":
        full = (1 << frame.n) - 1
        return SupportVector.from_dict(frame, {U: s[full] - (s[full ^ U] if full ^ U else 0) for U in frame.keys})
    raise ValueError(target)


# ---------------------------------------------------------------------------
# JSON


def frac_text(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def polytope_to_json(s: SupportVector, V: VPolytope | None = None) -> dict:
    V = vertices_from_support(s) if V is None else V
    return {
        "n": s.frame.n,
        "kind": s.frame.kind,
        "vertices": [[frac_text(c) for c in p] for p in V.vertices],
        "support": {key_to_text(k, s.frame): frac_text(v) for k, v in s.values},
    }


def polytope_from_json(data: dict) -> SupportVector:
    frame = FanFrame(data.get("kind", "A"), int(data["n"]))
    if data.get("support"):
        d = {text_to_key(k, frame): Fraction(v) for k, v in data["support"].items()}
        return SupportVector.from_dict(frame, d)
    pts = [tuple(Fraction(c) for c in p) for p in data["vertices"]]
    return polytope_support(pts, frame)
