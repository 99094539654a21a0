"""Compiled kernels agree with their numpy fallbacks."""

import os
import subprocess
import sys

import numpy as np
import pytest

from shardpoly import _kernels as K


def random_graph(rng, nodes, edges, labels):
    e = rng.integers(0, nodes, size=(edges, 2))
    lab = rng.integers(0, labels, size=edges)
    return e, lab


@pytest.mark.parametrize("seed", range(5))
def test_components_agree(seed):
    rng = np.random.default_rng(seed)
    e, lab = random_graph(rng, 30, 60, 8)
    masks = rng.integers(0, 2, size=(20, 8))
    a = K._components_nb(30, e[:, 0].copy(), e[:, 1].copy(), lab, masks)
    b = K._components_np(30, e[:, 0].copy(), e[:, 1].copy(), lab, masks)
    assert np.array_equal(a, b)


def brute_components(n_nodes, e, lab, mask):
    """Oracle: graph search over the contracted edges."""
    adj = {x: set() for x in range(n_nodes)}
    for (u, v), l in zip(e, lab):
        if mask[l] == 0:
            adj[u].add(v)
            adj[v].add(u)
    comp, out, nxt = {}, [], 0
    for x in range(n_nodes):
        if x not in comp:
            stack = [x]
            comp[x] = nxt
            while stack:
                y = stack.pop()
                for z in adj[y]:
                    if z not in comp:
                        comp[z] = nxt
                        stack.append(z)
            nxt += 1
        out.append(comp[x])
    return out


def test_components_match_search():
    rng = np.random.default_rng(11)
    e, lab = random_graph(rng, 25, 40, 6)
    masks = rng.integers(0, 2, size=(10, 6))
    got = K.contracted_components(25, e, lab, masks)
    for row, m in zip(got, masks):
        assert list(row) == brute_components(25, e, lab, m)


@pytest.mark.parametrize("seed", range(5))
def test_partitions_agree(seed):
    rng = np.random.default_rng(seed)
    tables = rng.integers(-1, 2, size=(7, 40, 3))
    masks = rng.integers(0, 3, size=(15, 7))
    assert np.array_equal(K._summed_partition_nb(tables, masks), K._summed_partition_np(tables, masks))


def test_chamber_vertices_agree():
    rng = np.random.default_rng(3)
    C, n = 12, 4
    support = rng.integers(-5, 6, size=20)
    rays = rng.integers(0, 20, size=(C, n))
    coords = np.array([rng.permutation(n) for _ in range(C)])
    signs = rng.choice([-1, 1], size=(C, n))
    a = K._chamber_vertices_nb(support, rays, coords, signs, n)
    b = K._chamber_vertices_np(support.copy(), rays, coords, signs, n)
    assert np.array_equal(a, b)


def test_upper_sets_agree():
    # A chain 0 < 1 < 2 plus a free element 3.
    order = [0, 1, 2, 3]
    forcing = [0, 1, 2, 0]
    a = sorted(int(x) for x in K._upper_sets_nb(np.array(order), np.array(forcing)))
    b = sorted(K._upper_sets_py(order, forcing))
    assert a == b
    assert len(b) == 4 * 2


def test_fallback_selected_by_environment():
    code = (
        "from shardpoly import _kernels, type_b\n"
        "print(_kernels.backend(), len(type_b.b_ideal_masks(3)), type_b.verify_cor131_all(2))\n"
    )
    env = dict(os.environ, SHARDPOLY_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "numpy"
    assert out.stdout.split()[1] == "8368"
    assert out.stdout.strip().endswith("(19, [])")
