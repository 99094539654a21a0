"""Size-parametrised verification runs behind ``shardpoly verify all``.

Each check returns ``(name, ok, detail)``.  Exhaustive sweeps are used
where they stay at desk scale; otherwise a seeded sample is drawn and the
sample size is reported in the detail string.
"""

from __future__ import annotations

import math
import random

from shardpoly import basis_conversions as bc
from shardpoly import matroid, quotientopes_a as qa, shards_a, type_b, volume
from shardpoly.polytope_core import (
    FanFrame,
    SizeCapExceeded,
    permutahedron_support,
    summand_space_dim,
)
from shardpoly.weak_order_a import enumerate_arc_ideals, enumerate_arcs, sylvester_ideal


def _all(name, items, pred, detail=""):
    items = list(items)
    bad = [x for x in items if not pred(x)]
    msg = f"{len(items)} checked" + (f", first failure {bad[0]}" if bad else "") + detail
    return name, not bad, msg


def checks_a(n: int, seed: int) -> list:
    out = []
    arcs = enumerate_arcs(n)
    out.append(("arc count", len(arcs) == 2**n - n - 1, f"{len(arcs)} arcs"))
    out.append(_all("shard walls", arcs, lambda al: shards_a.verify_prop48(al).ok))
    out.append(_all("spanning trees", arcs, matroid.verify_prop72))
    if n <= 5:
        out.append(_all("shard indecomposable", arcs, lambda al: summand_space_dim(shards_a.shard_support(al)) == 1))
        perm = summand_space_dim(permutahedron_support(FanFrame("A", n)))
        out.append(("permutahedron summands", perm == 2**n - n - 1, str(perm)))
        out.append(_all("beta invariants", arcs, matroid.verify_abd))
        keys, Ms = bc.build_matrix("s_of_y", n)
        _, My = bc.build_matrix("y_of_s", n)
        _, Mz = bc.build_matrix("z_of_s", n)
        _, Mzs = bc.build_matrix("s_of_z", n)
        one = bc.sympy_matrix(Ms) * bc.sympy_matrix(My) == bc.sympy_matrix([[int(i == j) for j in range(len(keys))]
                                                                             for i in range(len(keys))])
        two = (bc.sympy_matrix(Mz) * bc.sympy_matrix(Mzs)).is_Identity if keys else True
        out.append(("basis inverses", one and two, f"{len(keys)} keys"))
        full = [al for al in arcs if al.a == 1 and al.b == n]
        out.append(_all("shard volumes", full, lambda al: volume.shard_volume(al) == _geometric_volume(al)))
    if n <= 4:
        ideals = list(enumerate_arc_ideals(n))
        out.append(_all("quotient fans", ideals, qa.verify_cor50, f" ({len(ideals)} ideals)"))
        out.append(_all("ray criterion", ideals, qa.ray_check_agrees))
        out.append(_all("PS-quotientopes", ideals, lambda I: qa.verify_prop100(I) and qa.verify_ps_fan(I)))
        out.append(_all("Cambrian associahedra", arcs, _hl_matches))
    if n <= 6:
        L = qa.loday(n)
        Q = qa.vertices_from_support(qa.quotientope(sylvester_ideal(n))).translate(tuple(range(1, n + 1)))
        out.append(("Loday associahedron", set(L.vertices) == set(Q.vertices), f"{len(L)} vertices"))
    return out


def _geometric_volume(alpha):
    from shardpoly.polytope_core import volume as geo

    return geo(shards_a.shard_polytope(alpha), "A", FanFrame("A", alpha.n))


def _hl_matches(alpha) -> bool:
    from shardpoly.polytope_core import vertices_from_support
    from shardpoly.weak_order_a import cambrian_ideal

    Q = vertices_from_support(qa.quotientope(cambrian_ideal(alpha))).translate(qa.hl_shift(alpha))
    return set(Q.vertices) == set(qa.hl(alpha).vertices)


def checks_b(n: int, seed: int) -> list:
    out = []
    arcs = type_b.enumerate_b_arcs(n)
    out.append(("B-arc count", len(arcs) == 3**n - n - 1, f"{len(arcs)} B-arcs"))
    if n > type_b.MAX_N_POLY:
        return out
    out.append(_all("B shard walls", arcs, lambda be: type_b.verify_prop130(be).ok))
    out.append(_all("B shard dimensions", arcs, lambda be: type_b.b_dimension(be) == type_b.expected_dimension(be)))
    if n > type_b.MAX_N_SWEEP:
        return out
    out.append(_all("B shard indecomposable", arcs,
                    lambda be: summand_space_dim(type_b.b_shard_support(be)) == 1))
    masks = type_b.b_ideal_masks(n)
    sym = type_b.symmetrized_count(n)
    out.append(("B congruence census", True, f"{len(masks)} ideals, {sym} symmetrized"))
    checked, bad = type_b.verify_cor131_all(n)
    out.append(("B quotient fans", not bad, f"{checked} ideals, {len(bad)} failures"))
    rng = random.Random(seed)
    sample = masks if len(masks) <= 50 else rng.sample(masks, 50)
    out.append(_all("B ray criterion", [type_b.ideal_of_mask(m, n) for m in sample], type_b.b_ray_check_agrees,
                    f" (seed {seed})"))
    cyc = [be for be in arcs if be.cls == type_b.SINGULAR and be.rep.b == n]
    out.append(_all("B Cambrian class count", cyc,
                    lambda be: len(type_b.b_congruence_classes(type_b.cambrian_b_ideal(be)).classes)
                    == math.comb(2 * n, n)))
    return out


def run_suite(n: int, kind: str, seed: int = 0) -> list:
    if kind == "A":
        if n > 8:
            raise SizeCapExceeded("type A verification is capped at n <= 8")
        return checks_a(n, seed)
    if n > 6:
        raise SizeCapExceeded("type B verification is capped at n <= 6")
    return checks_b(n, seed)
