"""Integer hot loops, compiled with numba when available.

Set ``SHARDPOLY_NO_NUMBA=1`` before import to force the pure numpy
fallback.  Both paths return identical arrays; the choice only affects
speed.  Everything here works on int64 data, so exactness is preserved.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SHARDPOLY_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled by SHARDPOLY_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def identity(fn):
            return fn

        return identity


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# Union-find over cover graphs


@njit(cache=True)
def _components_nb(n_nodes, eu, ev, elab, masks):
    n_ideals = masks.shape[0]
    out = np.empty((n_ideals, n_nodes), dtype=np.int64)
    parent = np.empty(n_nodes, dtype=np.int64)
    relabel = np.empty(n_nodes, dtype=np.int64)
    for t in range(n_ideals):
        for x in range(n_nodes):
            parent[x] = x
        for e in range(eu.shape[0]):
            if masks[t, elab[e]] == 0:
                x = eu[e]
                while parent[x] != x:
                    x = parent[x]
                y = ev[e]
                while parent[y] != y:
                    y = parent[y]
                if x != y:
                    if x < y:
                        parent[y] = x
                    else:
                        parent[x] = y
        for x in range(n_nodes):
            relabel[x] = -1
        nxt = 0
        for x in range(n_nodes):
            r = x
            while parent[r] != r:
                r = parent[r]
            if relabel[r] < 0:
                relabel[r] = nxt
                nxt += 1
            out[t, x] = relabel[r]
    return out


def _components_np(n_nodes, eu, ev, elab, masks):
    n_ideals = masks.shape[0]
    out = np.empty((n_ideals, n_nodes), dtype=np.int64)
    for t in range(n_ideals):
        # Label propagation: repeatedly take the minimum label along contracted edges.
        keep = masks[t, elab] == 0
        u, v = eu[keep], ev[keep]
        lab = np.arange(n_nodes, dtype=np.int64)
        while True:
            m = np.minimum(lab[u], lab[v])
            new = lab.copy()
            np.minimum.at(new, u, m)
            np.minimum.at(new, v, m)
            new = new[new]
            if np.array_equal(new, lab):
                break
            lab = new
        out[t] = _first_appearance(lab)
    return out


def _first_appearance(lab):
    _, first, inv = np.unique(lab, return_index=True, return_inverse=True)
    order = np.argsort(np.argsort(first))
    return order[inv].astype(np.int64)


def contracted_components(n_nodes, edges, labels, masks):
    """Component labels after contracting edges whose label is absent from each mask row.

    ``masks[t, k]`` is nonzero when label ``k`` is kept (not contracted).
    Labels are numbered by first appearance, so equal partitions give
    equal rows.
    """
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    eu = np.ascontiguousarray(edges[:, 0])
    ev = np.ascontiguousarray(edges[:, 1])
    elab = np.asarray(labels, dtype=np.int64)
    masks = np.ascontiguousarray(np.asarray(masks, dtype=np.int64).reshape(-1, masks.shape[-1]))
    if HAVE_NUMBA:
        return _components_nb(int(n_nodes), eu, ev, elab, masks)
    return _components_np(int(n_nodes), eu, ev, elab, masks)


# ---------------------------------------------------------------------------
# Grouping chambers by their vertex


@njit(cache=True)
def _summed_partition_nb(tables, masks):
    n_ideals = masks.shape[0]
    K, C, d = tables.shape
    out = np.empty((n_ideals, C), dtype=np.int64)
    acc = np.empty((C, d), dtype=np.int64)
    for t in range(n_ideals):
        for c in range(C):
            for j in range(d):
                acc[c, j] = 0
        for k in range(K):
            w = masks[t, k]
            if w != 0:
                for c in range(C):
                    for j in range(d):
                        acc[c, j] += w * tables[k, c, j]
        nxt = 0
        for c in range(C):
            out[t, c] = -1
        for c in range(C):
            if out[t, c] >= 0:
                continue
            out[t, c] = nxt
            for c2 in range(c + 1, C):
                if out[t, c2] < 0:
                    same = True
                    for j in range(d):
                        if acc[c, j] != acc[c2, j]:
                            same = False
                            break
                    if same:
                        out[t, c2] = nxt
            nxt += 1
    return out


def _summed_partition_np(tables, masks):
    n_ideals = masks.shape[0]
    K, C, d = tables.shape
    flat = tables.reshape(K, C * d)
    sums = (masks @ flat).reshape(n_ideals, C, d)
    out = np.empty((n_ideals, C), dtype=np.int64)
    for t in range(n_ideals):
        _, first, inv = np.unique(sums[t], axis=0, return_index=True, return_inverse=True)
        order = np.argsort(np.argsort(first))
        out[t] = order[inv.reshape(-1)]
    return out


def summed_vertex_partition(tables, masks):
    """Partition chambers by the vertex of a weighted sum of polytopes.

    ``tables[k, c]`` is the vertex of polytope ``k`` selected by chamber
    ``c``; ``masks[t, k]`` is the integer weight of polytope ``k`` in sum
    ``t``.  Blocks are numbered by first appearance.
    """
    tables = np.ascontiguousarray(np.asarray(tables, dtype=np.int64))
    masks = np.ascontiguousarray(np.atleast_2d(np.asarray(masks, dtype=np.int64)))
    if HAVE_NUMBA:
        return _summed_partition_nb(tables, masks)
    return _summed_partition_np(tables, masks)


# ---------------------------------------------------------------------------
# Chamber vertices from integer supports


@njit(cache=True)
def _chamber_vertices_nb(support, rays, coords, signs, dim):
    C, n = rays.shape
    out = np.zeros((C, dim), dtype=np.int64)
    for c in range(C):
        for k in range(n):
            val = support[rays[c, k]]
            if k + 1 < n:
                val -= support[rays[c, k + 1]]
            out[c, coords[c, k]] = signs[c, k] * val
    return out


def _chamber_vertices_np(support, rays, coords, signs, dim):
    C, n = rays.shape
    vals = support[rays]
    vals[:, :-1] -= support[rays[:, 1:]]
    out = np.zeros((C, dim), dtype=np.int64)
    np.put_along_axis(out, coords, signs * vals, axis=1)
    return out


def chamber_vertices(support, rays, coords, signs, dim):
    """Triangular solve ``v_{sigma_k} = s(U_k) - s(U_{k+1})`` for every chamber at once."""
    args = (
        np.ascontiguousarray(np.asarray(support, dtype=np.int64)),
        np.ascontiguousarray(np.asarray(rays, dtype=np.int64)),
        np.ascontiguousarray(np.asarray(coords, dtype=np.int64)),
        np.ascontiguousarray(np.asarray(signs, dtype=np.int64)),
        int(dim),
    )
    if HAVE_NUMBA:
        return _chamber_vertices_nb(*args)
    return _chamber_vertices_np(*args)


# ---------------------------------------------------------------------------
# Upper set enumeration


@njit(cache=True)
def _upper_sets_nb(order, forcing):
    m = order.shape[0]
    results = []
    stack_pos = np.empty(m + 1, dtype=np.int64)
    stack_mask = np.empty(m + 1, dtype=np.int64)
    stack_pos[0] = 0
    stack_mask[0] = 0
    top = 1
    while top > 0:
        top -= 1
        pos = stack_pos[top]
        mask = stack_mask[top]
        if pos == m:
            results.append(mask)
            continue
        k = order[pos]
        stack_pos[top] = pos + 1
        stack_mask[top] = mask
        top += 1
        if (forcing[k] & mask) == forcing[k]:
            stack_pos[top] = pos + 1
            stack_mask[top] = mask | (np.int64(1) << k)
            top += 1
    return results


def _upper_sets_py(order, forcing):
    results = []
    m = len(order)

    def rec(pos, mask):
        if pos == m:
            results.append(mask)
            return
        k = order[pos]
        rec(pos + 1, mask)
        if forcing[k] & mask == forcing[k]:
            rec(pos + 1, mask | (1 << k))

    rec(0, 0)
    return results


def enumerate_upper_sets(order, forcing) -> list:
    """Bitmasks closed under adding forcers, deciding elements in ``order``.

    ``forcing[k]`` is the mask of elements that must be present before
    ``k`` may be added; ``order`` must list every such element before ``k``.
    """
    if HAVE_NUMBA and len(order) <= 62:
        res = _upper_sets_nb(np.asarray(order, dtype=np.int64), np.asarray(forcing, dtype=np.int64))
        return [int(x) for x in res]
    return _upper_sets_py(list(order), [int(f) for f in forcing])
