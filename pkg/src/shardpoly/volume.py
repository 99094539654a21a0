"""Mixed volumes of shard polytopes through simplex decompositions.

Volumes in ``R^n`` are measured after dropping the last coordinate, so
the standard simplex ``Delta_[n]`` has volume ``1/(n-1)!``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from shardpoly.basis_conversions import canonical_keys, subset_of_arc, triangle, weight
from shardpoly.weak_order_a import Arc


def dragon_marriage(subsets, n: int | None = None) -> bool:
    """Every ``k`` of the subsets cover at least ``k + 1`` elements."""
    subsets = [frozenset(J) for J in subsets]
    m = len(subsets)
    for k in range(1, m + 1):
        for idx in itertools.combinations(range(m), k):
            if len(frozenset().union(*(subsets[i] for i in idx))) < k + 1:
                return False
    return True


def _has_sdr(subsets, avoid) -> bool:
    """Distinct representatives avoiding ``avoid``, by augmenting paths."""
    match = {}

    def augment(i, seen):
        for x in subsets[i]:
            if x == avoid or x in seen:
                continue
            seen.add(x)
            if x not in match or augment(match[x], seen):
                match[x] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(subsets)))


def dragon_marriage_sdr(subsets, n: int) -> bool:
    """For every ``j`` there are distinct representatives avoiding ``j``."""
    subsets = [sorted(J) for J in subsets]
    return all(_has_sdr(subsets, j) for j in range(1, n + 1))


def dragon_marriage_tree(subsets, n: int) -> bool:
    """Some choice of one pair inside each subset forms a spanning tree of ``K_n``."""
    pair_choices = [list(itertools.combinations(sorted(J), 2)) for J in subsets]
    if len(subsets) != n - 1:
        return False
    for choice in itertools.product(*pair_choices):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in choice:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            return True
    return False


def simplex_mixed_volume(subsets, n: int | None = None) -> Fraction:
    n = n or len(subsets) + 1
    if dragon_marriage(subsets, n):
        return Fraction(1, math.factorial(n - 1))
    return Fraction(0)


@lru_cache(maxsize=None)
def admissible(alpha: Arc) -> tuple:
    """``(J, sign)`` over the simplices in the decomposition of the shard polytope."""
    I = subset_of_arc(alpha)
    return tuple((J, (-1) ** weight(J, I)) for J in canonical_keys(alpha.n) if triangle(I, J))


def shard_mixed_volume(arcs) -> Fraction:
    """Signed count of dragon marriages among admissible simplices, over ``(n-1)!``."""
    arcs = list(arcs)
    n = arcs[0].n
    if len(arcs) != n - 1:
        raise ValueError(f"need {n - 1} arcs, got {len(arcs)}")
    total = 0
    for choice in itertools.product(*(admissible(al) for al in arcs)):
        if dragon_marriage([J for J, _ in choice], n):
            total += math.prod(sign for _, sign in choice)
    return Fraction(total, math.factorial(n - 1))


def shard_volume(alpha: Arc) -> Fraction:
    """Volume of ``SP(alpha)``; zero unless the arc spans ``[1, n]``."""
    return shard_mixed_volume([alpha] * (alpha.n - 1))


def conditions_agree(subsets, n: int) -> bool:
    """The three equivalent forms of the dragon marriage condition agree."""
    a = dragon_marriage(subsets, n)
    return a == dragon_marriage_sdr(subsets, n) == dragon_marriage_tree(subsets, n)
