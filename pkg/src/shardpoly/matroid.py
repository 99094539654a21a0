"""Shard graphs and their cycle matroids.

The shard graph of an arc is a series-parallel multigraph whose spanning
trees are the vertices of the translated shard polytope.  Matroids are
stored by their list of bases, which is plenty for ground sets of size
at most eight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from shardpoly.basis_conversions import CoeffVector, subset_of_arc
from shardpoly.shards_a import shard_polytope
from shardpoly.weak_order_a import Arc


class Disconnected(ValueError):
    pass


@dataclass(frozen=True)
class ShardGraph:
    """Multigraph on ``0..num_vertices-1`` with labelled edges; loops have equal endpoints."""

    num_vertices: int
    edges: tuple  # ((u, v), label)
    n: int

    def loopless(self) -> tuple:
        return tuple(e for e in self.edges if e[0][0] != e[0][1])

    def labels(self) -> tuple:
        return tuple(sorted(lab for _, lab in self.edges))

    def to_json(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "edges": [{"u": u, "v": v, "label": lab} for (u, v), lab in self.edges],
        }


def shard_graph(alpha: Arc) -> ShardGraph:
    left = (alpha.a,) + alpha.A
    right = alpha.B + (alpha.b,)
    bs = (alpha.a - 1,) + right  # bs[k] = b_k with b_0 = a - 1
    top = len(alpha.B) + 1
    edges = []
    for ai in left:
        k = next(k for k in range(top) if bs[k] < ai < bs[k + 1])
        edges.append(((k, top), ai))
    for j, bj in enumerate(right, start=1):
        edges.append(((j - 1, j), bj))
    for k in range(1, alpha.n + 1):
        if not alpha.a <= k <= alpha.b:
            edges.append(((top, top), k))
    edges.sort(key=lambda e: e[1])
    return ShardGraph(top + 1, tuple(edges), alpha.n)


def _components(num_vertices: int, edges) -> int:
    parent = list(range(num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = num_vertices
    for (u, v), _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def spanning_trees(G: ShardGraph) -> set:
    """Label sets of all spanning trees of the loopless part."""
    edges = G.loopless()
    if _components(G.num_vertices, edges) != 1:
        raise Disconnected("loopless part is disconnected")
    out = set()
    for sub in itertools.combinations(edges, G.num_vertices - 1):
        if _components(G.num_vertices, sub) == 1:
            out.add(frozenset(lab for _, lab in sub))
    return out


def verify_prop72(alpha: Arc) -> bool:
    """Spanning tree indicators are the vertices of ``SP(alpha) + 1_{B ∪ {b}}``."""
    n = alpha.n
    trees = {tuple(int(i in T) for i in range(1, n + 1)) for T in spanning_trees(shard_graph(alpha))}
    shift = [int(i in alpha.right) for i in range(1, n + 1)]
    verts = {tuple(int(x + s) for x, s in zip(v, shift)) for v in shard_polytope(alpha).vertices}
    return trees == verts


# ---------------------------------------------------------------------------
# Graph structure


def is_2connected(G: ShardGraph) -> bool:
    """Connected, and still connected after deleting any single vertex (loops ignored)."""
    edges = G.loopless()
    V = G.num_vertices
    if V < 2 or _components(V, edges) != 1:
        return False
    if V == 2:
        return True
    for x in range(V):
        rest = [((u - (u > x), v - (v > x)), lab) for (u, v), lab in edges if x not in (u, v)]
        if _components(V - 1, rest) != 1:
            return False
    return True


def is_series_parallel(G: ShardGraph) -> bool:
    """Whether the loopless part reduces to a single edge.

    Each step merges a pair of parallel edges or suppresses a vertex of
    degree two with two distinct neighbours.
    """
    edges = [tuple(sorted(e)) for e, _ in G.loopless()]
    if not edges:
        return False
    while True:
        verts = {v for e in edges for v in e}
        if len(edges) == 1:
            return len(verts) == 2
        seen = set()
        dup = None
        for k, e in enumerate(edges):
            if e in seen:
                dup = k
                break
            seen.add(e)
        if dup is not None:
            del edges[dup]
            continue
        for v in verts:
            inc = [e for e in edges if v in e]
            if len(inc) == 2:
                (x,) = set(inc[0]) - {v}
                (y,) = set(inc[1]) - {v}
                edges = [e for e in edges if v not in e] + [tuple(sorted((x, y)))]
                break
        else:
            return False


# ---------------------------------------------------------------------------
# Matroids by bases


@dataclass(frozen=True)
class MatroidView:
    ground: frozenset
    bases: frozenset  # frozenset of frozensets

    @classmethod
    def from_graph(cls, G: ShardGraph) -> "MatroidView":
        return cls(frozenset(G.labels()), frozenset(spanning_trees(G)))

    @classmethod
    def of_arc(cls, alpha: Arc) -> "MatroidView":
        return cls.from_graph(shard_graph(alpha))

    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def exchange_ok(self) -> bool:
        for B1 in self.bases:
            for B2 in self.bases:
                for x in B1 - B2:
                    if not any((B1 - {x}) | {y} in self.bases for y in B2 - B1):
                        return False
        return True


def rank(M: MatroidView, X) -> int:
    X = frozenset(X)
    return max(len(B & X) for B in M.bases)


def contract(M: MatroidView, K) -> MatroidView:
    K = frozenset(K)
    rk = rank(M, K)
    bases = frozenset(B - K for B in M.bases if len(B & K) == rk)
    return MatroidView(M.ground - K, bases)


def beta(M: MatroidView) -> int:
    ground = sorted(M.ground)
    total = 0
    for k in range(len(ground) + 1):
        for X in itertools.combinations(ground, k):
            total += (-1) ** k * rank(M, X)
    return (-1) ** M.rank() * total


def signed_beta(M: MatroidView) -> int:
    return (-1) ** (M.rank() + 1) * beta(M)


def abd_decomposition(M: MatroidView, n: int | None = None):
    """Simplex coefficients of the matroid polytope from signed beta invariants.

    Returns ``(y, shift)``: the coefficients on subsets of size at least two
    and the translation collected from one-element subsets.
    """
    ground = sorted(M.ground)
    n = n or max(ground)
    y = {}
    shift = [Fraction(0)] * n
    for k in range(len(ground)):
        for K in itertools.combinations(ground, k):
            J = tuple(x for x in ground if x not in K)
            c = signed_beta(contract(M, K))
            if not c:
                continue
            if len(J) == 1:
                shift[J[0] - 1] += c
            else:
                y[J] = c
    return CoeffVector.from_dict("y", n, y), tuple(shift)


def connected_sp_contractions(alpha: Arc) -> set:
    """Complements ``[n] - K`` with ``M/K`` series-parallel and connected (beta equal to one)."""
    M = MatroidView.of_arc(alpha)
    ground = sorted(M.ground)
    out = set()
    for k in range(len(ground) + 1):
        for K in itertools.combinations(ground, k):
            if beta(contract(M, K)) == 1:
                out.add(frozenset(x for x in ground if x not in K))
    return out


def connected_contraction_sets(alpha: Arc) -> set:
    """Sets ``X ∪ Y`` with ``X ⊆ B ∪ {a, b}``, ``|X| >= 2`` and ``Y = A ∩ ]min X, max X[``."""
    pool = sorted(set(alpha.B) | {alpha.a, alpha.b})
    out = set()
    for k in range(2, len(pool) + 1):
        for X in itertools.combinations(pool, k):
            Y = {x for x in alpha.A if X[0] < x < X[-1]}
            out.add(frozenset(X) | Y)
    return out


def verify_connected_contractions(alpha: Arc) -> bool:
    return connected_sp_contractions(alpha) == connected_contraction_sets(alpha)


def verify_abd(alpha: Arc) -> bool:
    """Beta-invariant coefficients equal the shard decomposition into simplices."""
    from shardpoly.basis_conversions import s_to_y, unit

    y, shift = abd_decomposition(MatroidView.of_arc(alpha), alpha.n)
    return y == s_to_y(unit("s", alpha.n, subset_of_arc(alpha))) and not any(shift)
