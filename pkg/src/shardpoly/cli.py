"""Command-line front end.

Every command prints deterministic text or JSON on stdout.  Rationals are
written as ``p/q`` strings.  Errors go to stderr as ``{"error": ...}`` and
map to exit codes: 1 for a failed verification, 2 for invalid input and
3 when a size cap is exceeded.
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction

import click

from shardpoly import basis_conversions as bc
from shardpoly import matroid, quotientopes_a as qa, shards_a, type_b, volume as vol
from shardpoly.polytope_core import (
    FanFrame,
    SizeCapExceeded,
    affine_dim,
    frac_text,
    key_to_text,
    polytope_from_json,
    polytope_to_json,
    vertices_from_support,
)
from shardpoly.polytope_core import volume as geometric_volume
from shardpoly.weak_order_a import (
    ArcIdeal,
    close_upward,
    cambrian_ideal,
    congruence_classes,
    enumerate_arc_ideals,
    enumerate_arcs,
    forces,
    format_arc,
    full_ideal,
    parse_arc,
    regularity_check,
    sylvester_ideal,
)

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class VerificationFailed(Exception):
    pass


def _fail(message: str, code: int):
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(code)


class _Group(click.Group):
    """Maps library exceptions to the documented exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SizeCapExceeded as exc:
            _fail(str(exc), EXIT_CAP)
        except VerificationFailed as exc:
            _fail(str(exc), EXIT_FAIL)
        except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
            _fail(f"{type(exc).__name__}: {exc}", EXIT_INPUT)


def _emit(data):
    click.echo(json.dumps(data, indent=1))


def _frac(x) -> str:
    return frac_text(x)


# ---------------------------------------------------------------------------
# Argument parsing


def _arc_n(text: str) -> int:
    m = re.match(r"^\s*(-?\d+)-(-?\d+)\|", text)
    if not m:
        raise ValueError(f"cannot read arc {text!r}")
    return max(abs(int(m.group(1))), abs(int(m.group(2))))


def read_arc(text: str, n: int | None, kind: str):
    n = n or _arc_n(text)
    if kind == "B":
        return type_b.parse_barc(text, n)
    return parse_arc(text, n)


def show_arc(alpha, kind: str) -> str:
    return type_b.format_barc(alpha) if kind == "B" else format_arc(alpha)


_NAMED = re.compile(r"^\s*(sylvester|full|empty|cambrian)\((.*)\)\s*$")


def read_ideal(ideal_text: str, n: int | None, kind: str):
    """Named form ``sylvester(N)``, ``full(N)``, ``empty(N)``, ``cambrian(ARC)`` or an arc-list file.

    A file holds one arc per line (``#`` starts a comment); the ideal is
    the upward closure of the listed arcs, and ``--n`` gives its size.
    """
    m = _NAMED.match(ideal_text)
    if m:
        name, arg = m.groups()
        if name == "cambrian":
            alpha = read_arc(arg, n, kind)
            return type_b.cambrian_b_ideal(alpha) if kind == "B" else cambrian_ideal(alpha)
        size = int(arg)
        _check_size(size, kind)
        if kind == "B":
            table = {"sylvester": type_b.sylvester_b_ideal, "full": type_b.full_b_ideal,
                     "empty": lambda k: type_b.BArcIdeal(frozenset(), k)}
        else:
            table = {"sylvester": sylvester_ideal, "full": full_ideal,
                     "empty": lambda k: ArcIdeal(frozenset(), k)}
        return table[name](size)
    with open(ideal_text) as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if n is None:
        n = max((_arc_n(ln) for ln in lines), default=0)
        if n == 0:
            raise ValueError("empty ideal file needs --n")
    arcs = [read_arc(ln, n, kind) for ln in lines]
    return type_b.b_close_upward(arcs, n) if kind == "B" else close_upward(arcs, n)


def _check_size(n: int, kind: str):
    cap = 8 if kind == "A" else 5
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"type {kind} polytope work is capped at n <= {cap}")


def _ideal_arcs(ideal, kind: str) -> list:
    return sorted(ideal.barcs) if kind == "B" else sorted(ideal.arcs)


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _read_weights(path: str | None, n: int, kind: str):
    if path is None:
        return None
    return {read_arc(k, n, kind): Fraction(v) for k, v in _read_json(path).items()}


TYPE = click.option("--type", "kind", type=click.Choice(["A", "B"]), default="A", show_default=True)


@click.group(cls=_Group)
def main():
    """Shard polytopes, quotientopes and their verification suites."""


# ---------------------------------------------------------------------------
# arcs


@main.group()
def arcs():
    """Enumerate arcs and the forcing order."""


@arcs.command("list")
@click.option("--n", type=int, required=True)
@TYPE
def arcs_list(n, kind):
    """One arc per line."""
    if kind == "B":
        if n > 6:
            raise SizeCapExceeded("type B arc enumeration is capped at n <= 6")
        items = type_b.enumerate_b_arcs(n)
    else:
        if n > 10:
            raise SizeCapExceeded("type A arc enumeration is capped at n <= 10")
        items = enumerate_arcs(n)
    for alpha in items:
        click.echo(show_arc(alpha, kind))


@arcs.command("poset")
@click.option("--n", type=int, required=True)
@TYPE
def arcs_poset(n, kind):
    """Cover relations ``X -> Y`` of the forcing order (X forces Y)."""
    _check_size(n, kind)
    if kind == "B":
        items, rel = type_b.enumerate_b_arcs(n), type_b.b_forces
    else:
        items, rel = enumerate_arcs(n), forces
    below = {x: [y for y in items if y != x and rel(x, y)] for x in items}
    for x in items:
        for y in below[x]:
            if not any(z in below[x] and y in below[z] for z in below[x]):
                click.echo(f"{show_arc(x, kind)} -> {show_arc(y, kind)}")


# ---------------------------------------------------------------------------
# ideal


@main.group()
def ideal():
    """Arc ideals and their congruences."""


@ideal.command("close")
@click.option("--n", type=int, required=True)
@click.option("--arcs", "arc_texts", multiple=True, required=True)
@TYPE
def ideal_close(n, arc_texts, kind):
    """Upward closure of the given arcs."""
    _check_size(n, kind)
    seed = [read_arc(t, n, kind) for t in arc_texts]
    I = type_b.b_close_upward(seed, n) if kind == "B" else close_upward(seed, n)
    for alpha in _ideal_arcs(I, kind):
        click.echo(show_arc(alpha, kind))


@ideal.command("enumerate")
@click.option("--n", type=int, required=True)
@click.option("--list", "listing", is_flag=True, help="Also print each ideal.")
@TYPE
def ideal_enumerate(n, listing, kind):
    """Count the arc ideals (and optionally list them, one per line)."""
    if kind == "B":
        if n > type_b.MAX_N_SWEEP:
            raise SizeCapExceeded(f"type B ideal enumeration is capped at n <= {type_b.MAX_N_SWEEP}")
        ideals = list(type_b.enumerate_b_ideals(n))
        sym = type_b.symmetrized_count(n)
    else:
        if n > 5:
            raise SizeCapExceeded("type A ideal enumeration is capped at n <= 5")
        ideals = list(enumerate_arc_ideals(n))
        sym = None
    if listing:
        for I in ideals:
            click.echo(" ".join(show_arc(a, kind) for a in _ideal_arcs(I, kind)) or "-")
    out = {"n": n, "type": kind, "ideals": len(ideals)}
    if sym is not None:
        out["symmetrized"] = sym
    _emit(out)


def _classes_json(I, kind):
    if kind == "B":
        part = type_b.b_congruence_classes(I)
        mins = [list(m.word) for m in part.class_min]
    else:
        part = congruence_classes(I)
        mins = [list(m) for m in part.class_min]
    return part, mins


@ideal.command("classes")
@click.option("--ideal", "ideal_text", required=True)
@click.option("--n", type=int)
@TYPE
def ideal_classes(ideal_text, n, kind):
    """Congruence classes, listed by their minimal permutations."""
    I = read_ideal(ideal_text, n, kind)
    part, mins = _classes_json(I, kind)
    _emit({"n": I.n, "type": kind, "count": len(part.classes), "class_min": mins,
           "sizes": [len(c) for c in part.classes]})


@ideal.command("regularity")
@click.option("--n", type=int)
@click.option("--ideal", "ideal_text")
@TYPE
def ideal_regularity(n, ideal_text, kind):
    """Regularity of one quotient, or a sweep over all ideals (the sweep needs ``--n``)."""
    if not ideal_text and n is None:
        raise ValueError("give --ideal or --n")
    if kind == "B":
        if ideal_text:
            I = read_ideal(ideal_text, n, kind)
            degrees = type_b.b_quotient_degrees(type_b.b_congruence_classes(I))
            _emit({"regular": len(set(degrees)) <= 1})
        else:
            _emit(type_b.b_regularity_experiment(n).to_json())
        return
    if ideal_text:
        direct, crit = regularity_check(read_ideal(ideal_text, n, kind))
        _emit({"regular": direct, "criterion": crit})
        return
    if n > 5:
        raise SizeCapExceeded("type A regularity sweep is capped at n <= 5")
    rows = [regularity_check(I) for I in enumerate_arc_ideals(n)]
    agree = sum(a == b for a, b in rows)
    _emit({"n": n, "ideals": len(rows), "regular": sum(a for a, _ in rows), "criterion_agrees": agree})
    if agree != len(rows):
        raise VerificationFailed("regularity criterion disagrees with the degree count")


# ---------------------------------------------------------------------------
# shard


@main.group()
def shard():
    """Shard polytope tools."""


ARC = click.option("--arc", "arc_text", required=True)
N_OPT = click.option("--n", type=int, help="Ambient size (defaults to the largest endpoint).")


@shard.command("poly")
@ARC
@N_OPT
@TYPE
def shard_poly(arc_text, n, kind):
    """Vertices and support of the shard polytope, as JSON."""
    alpha = read_arc(arc_text, n, kind)
    _check_size(alpha.n, kind)
    if kind == "B":
        V = type_b.b_shard_polytope(alpha)
        out = polytope_to_json(type_b.b_shard_support(alpha), V)
        out["class"] = alpha.cls
    else:
        V = shards_a.shard_polytope(alpha)
        out = polytope_to_json(shards_a.shard_support(alpha), V)
    out["dimension"] = affine_dim(V.vertices)
    _emit(out)


@shard.command("facets")
@ARC
@N_OPT
def shard_facets(arc_text, n):
    """Inequalities ``<normal, x> <= rhs`` and equalities of the shard polytope."""
    alpha = read_arc(arc_text, n, "A")
    ineqs, eqs = shards_a.shard_polytope_facets(alpha)
    _emit({
        "inequalities": [{"normal": list(q.normal), "rhs": q.rhs, "kind": q.kind} for q in ineqs],
        "equalities": [{"normal": list(u), "rhs": r} for u, r in eqs],
    })


@shard.command("matchings")
@ARC
@N_OPT
def shard_matchings(arc_text, n):
    """Alternating matchings in dot notation, each with its vertex."""
    alpha = read_arc(arc_text, n, "A")
    for M in shards_a.enumerate_matchings(alpha):
        vertex = " ".join(str(c) for c in shards_a.chi(M, alpha.n))
        click.echo(f"{shards_a.render_matching(M, alpha)}  ({vertex})")


@shard.command("matroid")
@ARC
@N_OPT
def shard_matroid(arc_text, n):
    """Shard graph, its spanning-tree count and the vertex-count check."""
    alpha = read_arc(arc_text, n, "A")
    G = matroid.shard_graph(alpha)
    out = G.to_json()
    out["spanning_trees"] = len(matroid.spanning_trees(G))
    out["vertices"] = shards_a.matching_count(alpha)
    out["series_parallel"] = matroid.is_series_parallel(G)
    _emit(out)
    if not matroid.verify_prop72(alpha):
        raise VerificationFailed("spanning trees and vertices disagree")


@shard.command("symmetry")
@ARC
@N_OPT
def shard_symmetry(arc_text, n):
    """Images of the arc under the two symmetries and the polytope check."""
    alpha = read_arc(arc_text, n, "A")
    out = {}
    for which in ("phi", "psi"):
        out[which] = {"image": format_arc(shards_a.symmetry_image(alpha, which)),
                      "holds": shards_a.symmetry_check(alpha, which)}
    _emit(out)
    if not all(v["holds"] for v in out.values()):
        raise VerificationFailed("symmetry check failed")


# ---------------------------------------------------------------------------
# quotientope


@main.group()
def quotientope():
    """Quotientopes of arc ideals."""


IDEAL = click.option("--ideal", "ideal_text", required=True, help="Named ideal or arc-list file.")


def _build(ideal_text, n, weights, kind):
    I = read_ideal(ideal_text, n, kind)
    _check_size(I.n, kind)
    w = _read_weights(weights, I.n, kind)
    s = type_b.b_quotientope(I, w) if kind == "B" else qa.quotientope(I, w)
    return I, s


@quotientope.command("build")
@IDEAL
@click.option("--n", type=int)
@click.option("--weights", type=click.Path(exists=True, dir_okay=False))
@TYPE
def quotientope_build(ideal_text, n, weights, kind):
    """Polytope JSON plus the minimal permutation of every class."""
    I, s = _build(ideal_text, n, weights, kind)
    V = vertices_from_support(s, check=False)
    out = polytope_to_json(s, V)
    out["classes"] = _classes_json(I, kind)[1]
    _emit(out)


@quotientope.command("verify")
@IDEAL
@click.option("--n", type=int)
@click.option("--weights", type=click.Path(exists=True, dir_okay=False))
@TYPE
def quotientope_verify(ideal_text, n, weights, kind):
    """Chamber partition of the quotientope against the congruence classes."""
    I, s = _build(ideal_text, n, weights, kind)
    if kind == "B":
        ok = type_b.verify_cor131(I, _read_weights(weights, I.n, kind))
    else:
        ok = qa.verify_cor50(I) if weights is None else (
            qa.chamber_partition(s) == qa.fan_of_ideal(I))
    click.echo(f"{'PASS' if ok else 'FAIL'} fan of quotientope equals congruence fan")
    if not ok:
        raise VerificationFailed("quotientope fan differs from the congruence fan")


@quotientope.command("rays")
@IDEAL
@click.option("--n", type=int)
@TYPE
def quotientope_rays(ideal_text, n, kind):
    """Support keys (upper sets) of the rays kept by the quotient fan, then the facet cross-check."""
    I = read_ideal(ideal_text, n, kind)
    _check_size(I.n, kind)
    frame = FanFrame(kind, I.n)

    if kind == "B":
        rays, ok = type_b.b_surviving_rays(I), type_b.b_ray_check_agrees(I)
    else:
        rays, ok = qa.surviving_rays(I), qa.ray_check_agrees(I)
    texts = sorted(key_to_text(U, frame) for U in rays)
    for t in texts:
        click.echo(t)
    click.echo(f"{'PASS' if ok else 'FAIL'} ray criterion agrees with facet normals")
    if not ok:
        raise VerificationFailed("ray criterion disagrees with facet normals")


# ---------------------------------------------------------------------------
# basis


@main.group()
def basis():
    """Coordinates of deformed permutahedra in the s, y and z bases."""


BASES = click.Choice(["s", "y", "z"])


@basis.command("convert")
@click.option("--from", "source", type=BASES, required=True)
@click.option("--to", "target", type=BASES, required=True)
@click.option("--in", "path", type=click.Path(exists=True, dir_okay=False), required=True)
def basis_convert(source, target, path):
    """Convert a coefficient vector JSON file between bases."""
    c = bc.CoeffVector.from_json(_read_json(path))
    if c.basis != source:
        raise ValueError(f"file holds basis {c.basis!r}, not {source!r}")
    _emit(bc.convert(c, target).to_json())


@basis.command("matrix")
@click.option("--which", type=click.Choice(["y_of_s", "s_of_y", "z_of_s", "s_of_z"]), required=True)
@click.option("--n", type=int, required=True)
def basis_matrix(which, n):
    """Change-of-basis matrix with rows and columns in canonical subset order."""
    _check_size(n, "A")
    keys, rows = bc.build_matrix(which, n)
    click.echo("\t" + "\t".join(bc.key_text(k) for k in keys))
    for k, row in zip(keys, rows):
        click.echo(bc.key_text(k) + "\t" + "\t".join(_frac(x) for x in row))


@basis.command("decompose")
@click.option("--polytope", "path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--to", "target", type=click.Choice(["s", "y"]), required=True)
def basis_decompose(path, target):
    """Coordinates of a (caged) deformed permutahedron."""
    s = polytope_from_json(_read_json(path))
    if s.frame.kind != "A":
        raise ValueError("decomposition is defined for type A polytopes")
    _emit(bc.decompose(s, target).to_json())


# ---------------------------------------------------------------------------
# ps-quotientope


@main.command("ps-quotientope")
@IDEAL
@click.option("--n", type=int)
@click.option("--f", "f_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON map from subsets like \"1,3\" to positive rationals; default is built in.")
def ps_quotientope_cmd(ideal_text, n, f_path):
    """Quotientope with forcing-dominant coefficients, after validating them."""
    I = read_ideal(ideal_text, n, "A")
    _check_size(I.n, "A")
    if f_path is None:
        f = qa.default_f(I.n)
    else:
        table = {tuple(sorted(int(t) for t in k.split(","))): Fraction(v) for k, v in _read_json(f_path).items()}
        missing = [k for k in bc.canonical_keys(I.n) if k not in table]
        if missing:
            raise ValueError(f"f is missing subset {bc.key_text(missing[0])}")
        f = table.__getitem__
    if not qa.validate_forcing_dominant(f, I.n):
        raise qa.NotForcingDominant("f is not forcing dominant")
    s = qa.ps_quotientope(I, f)
    out = polytope_to_json(s, vertices_from_support(s, check=False))
    out["fan_ok"] = qa.verify_ps_fan(I, f)
    out["coordinates_ok"] = qa.verify_prop100(I, f)
    _emit(out)
    if not (out["fan_ok"] and out["coordinates_ok"]):
        raise VerificationFailed("PS-quotientope check failed")


# ---------------------------------------------------------------------------
# volume


@main.group("volume")
def volume_group():
    """Volumes and mixed volumes."""


ARCS = click.option("--arcs", "arc_texts", multiple=True, required=True)


@volume_group.command("shard")
@ARCS
@N_OPT
def volume_shard(arc_texts, n):
    """Volume of each shard polytope, combinatorial and geometric."""
    for t in arc_texts:
        alpha = read_arc(t, n, "A")
        _check_size(alpha.n, "A")
        comb = vol.shard_volume(alpha)
        geo = geometric_volume(shards_a.shard_polytope(alpha), "A", FanFrame("A", alpha.n))
        click.echo(f"{format_arc(alpha)}\t{_frac(comb)}\t{_frac(geo)}")
        if comb != geo:
            raise VerificationFailed(f"volumes disagree for {format_arc(alpha)}")


@volume_group.command("mixed")
@ARCS
@N_OPT
@click.option("--oracle/--no-oracle", default=True, show_default=True,
              help="Cross-check with the interpolation oracle.")
def volume_mixed(arc_texts, n, oracle):
    """Mixed volume of n - 1 shard polytopes."""
    items = [read_arc(t, n, "A") for t in arc_texts]
    size = max(a.n for a in items)
    items = [parse_arc(format_arc(a), size) for a in items]
    _check_size(size, "A")
    mv = vol.shard_mixed_volume(items)
    click.echo(_frac(mv))
    if oracle:
        ref = qa_mixed(items)
        click.echo(f"{'PASS' if ref == mv else 'FAIL'} oracle {_frac(ref)}")
        if ref != mv:
            raise VerificationFailed("mixed volume disagrees with the oracle")


def qa_mixed(items):
    from shardpoly.polytope_core import mixed_volume_oracle

    n = items[0].n
    return mixed_volume_oracle([shards_a.shard_polytope(a) for a in items], "A", FanFrame("A", n))


@volume_group.command("oracle")
@click.option("--polytope", "path", type=click.Path(exists=True, dir_okay=False), required=True)
def volume_oracle(path):
    """Normalised volume of a polytope JSON file."""
    s = polytope_from_json(_read_json(path))
    V = vertices_from_support(s, check=False)
    click.echo(_frac(geometric_volume(V, s.frame.kind, s.frame)))


# ---------------------------------------------------------------------------
# verify


@main.group()
def verify():
    """Verification suites."""


@verify.command("all")
@click.option("--n", type=int, required=True)
@TYPE
@click.option("--seed", type=int, default=0, show_default=True)
def verify_all(n, kind, seed):
    """Run every check at size n; exit 1 if any fails."""
    from shardpoly.suite import run_suite

    click.echo(f"seed {seed}")
    rows = run_suite(n, kind, seed)
    for name, ok, detail in sorted(rows, key=lambda r: r[0]):
        click.echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    if not all(ok for _, ok, _ in rows):
        raise VerificationFailed("some checks failed")


# ---------------------------------------------------------------------------
# render


@main.group()
def render():
    """Static SVG drawings."""


def arc_svg(points, A, B, a, b, labels) -> str:
    """Arc from ``a`` to ``b`` passing above ``A`` and below ``B`` over numbered dots."""
    step, w, mid = 50, 50 * (len(points) + 1), 60
    xs = {p: step * (k + 1) for k, p in enumerate(points)}
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{2 * mid}">']
    for p in points:
        parts.append(f'<circle cx="{xs[p]}" cy="{mid}" r="4" fill="black"/>')
        parts.append(f'<text x="{xs[p] - 4}" y="{mid + 30}" font-size="12">{labels[p]}</text>')
    path = [f"M {xs[a]} {mid}"]
    for p in points:
        if a < p < b and p in xs:
            dy = -20 if p in A else 20
            path.append(f"L {xs[p]} {mid + dy}")
    path.append(f"L {xs[b]} {mid}")
    parts.append(f'<path d="{" ".join(path)}" stroke="blue" fill="none" stroke-width="2"/>')
    parts.append("</svg>")
    return "\n".join(parts)


@render.command("arc")
@click.option("--in", "arc_text", required=True, help="Arc text.")
@click.option("--svg", "out", type=click.Path(dir_okay=False), required=True)
@N_OPT
@TYPE
def render_arc(arc_text, out, n, kind):
    """Draw an arc (for a B-arc, both arcs of the symmetric pair)."""
    alpha = read_arc(arc_text, n, kind)
    if kind == "B":
        pts = [x for x in range(-alpha.n, alpha.n + 1) if x != 0]
        labels = {p: str(p) for p in pts}
        pieces = [arc_svg(pts, set(x.A), set(x.B), x.a, x.b, labels) for x in alpha.arcs]
        svg = pieces[0] if len(pieces) == 1 else _stack(pieces)
    else:
        pts = list(range(1, alpha.n + 1))
        svg = arc_svg(pts, set(alpha.A), set(alpha.B), alpha.a, alpha.b, {p: str(p) for p in pts})
    with open(out, "w") as fh:
        fh.write(svg)
    click.echo(out)


def _stack(pieces) -> str:
    inner = [p.split("\n", 1)[1].rsplit("\n", 1)[0] for p in pieces]
    body = "\n".join(f'<g transform="translate(0,{120 * k})">\n{s}\n</g>' for k, s in enumerate(inner))
    width = pieces[0].split('width="', 1)[1].split('"', 1)[0]
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{120 * len(pieces)}">\n'
            f"{body}\n</svg>")


@render.command("polytope2d")
@click.option("--in", "path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Polytope JSON file.")
@click.option("--svg", "out", type=click.Path(dir_okay=False), required=True)
def render_polytope2d(path, out):
    """Project a polytope to the plane and draw its vertices and hull."""
    data = _read_json(path)
    s = polytope_from_json(data)
    V = vertices_from_support(s, check=False)
    d = s.frame.n
    # Two fixed generic directions; presentation only, so floats are fine here.
    u = [1.0 * k for k in range(d)]
    v = [float((k * k) % (d + 2)) - d / 2 for k in range(d)]
    pts = [(sum(a * float(c) for a, c in zip(u, p)), sum(a * float(c) for a, c in zip(v, p))) for p in V.vertices]
    hull = _hull2d(pts)
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    size, pad = 400, 20

    def place(p):
        return (pad + (p[0] - min(xs)) / span * (size - 2 * pad), pad + (p[1] - min(ys)) / span * (size - 2 * pad))

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    if len(hull) > 1:
        poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(place, hull))
        parts.append(f'<polygon points="{poly}" fill="#dde" stroke="black"/>')
    for p in pts:
        x, y = place(p)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    parts.append("</svg>")
    with open(out, "w") as fh:
        fh.write("\n".join(parts))
    click.echo(out)


def _hull2d(pts):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


if __name__ == "__main__":
    main()
