"""Command-line front end: ``weylcircles VERB [options] < moments.json``.

Verbs
-----
ortho     coefficient arrays of ``P_k``, ``Q_k`` and the recurrence
kernels   ``A_n, B_n, C_n, D_n`` at ``(z, w)`` in sum and determinant form
circle    WeylRegion JSON of the chosen problem
region    the same, plus boundary maps and construction diagnostics
boundary  CSV samples ``arc,t,re,im`` along every boundary arc
plot      SVG of circles, vertices and transforms of sampled solutions
verify    kernel identities, Moebius oracle and membership checks

The input is a moment sequence ``{"label": ..., "values": [...]}`` read
from ``--input`` or stdin. Exit codes: 0 success, 1 parse error, 2
library error (printed by class name), 3 verification failure.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import re
import sys
import warnings

import numpy as np

from . import errors
from .kernels import (
    RELATION_IDS,
    KernelKind,
    all_kernels,
    double_det,
    kernel_det,
    random_quadruples,
    relation_residuals,
)
from .measures import canonical_measure, mix, stieltjes_transform
from .moebius import MoebiusMap, circle_through, image_of_real_line
from .moments import MomentSequence, check_positivity
from .orthopoly import COND_LIMIT, MAX_ORDER, OrthoSystem, orthonormal_system
from .weyl import (
    MembershipDiagnostic,
    WeylRegion,
    boundary_samples,
    contains,
    gap_circles,
    hamburger_region,
    interval_region,
    multi_gap_region,
    sample_parameters,
    stieltjes_region,
    validate_membership,
)

VERBS = ("ortho", "kernels", "circle", "region", "verify", "boundary", "plot")
PROBLEMS = ("hamburger", "stieltjes", "interval", "gap", "multigap")
FORMATS = {
    "ortho": ("json",),
    "kernels": ("json",),
    "circle": ("json",),
    "region": ("json",),
    "verify": ("json",),
    "boundary": ("csv", "json"),
    "plot": ("svg", "json"),
}
DEFAULT_TOL = 1e-9

EXIT_OK, EXIT_PARSE, EXIT_LIBRARY, EXIT_VERIFY = 0, 1, 2, 3

_NUM = r"[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?"
_COMPLEX = re.compile(rf"^([+-]?{_NUM})([+-]{_NUM})i$")


class ParseError(Exception):
    """Malformed command line or input document (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def parse_complex(text: str) -> complex:
    """Parse the ``RE+IMi`` literal, e.g. ``0+1i`` or ``-3+0.5i``."""
    m = _COMPLEX.match(text.strip())
    if not m:
        raise ParseError(f"complex literal must look like RE+IMi, got {text!r}")
    return complex(float(m.group(1)), float(m.group(2)))


def parse_gaps(text: str) -> list[tuple[float, float]]:
    """Parse ``a1,b1;a2,b2``."""
    try:
        gaps = []
        for part in text.split(";"):
            a, b = part.split(",")
            gaps.append((float(a), float(b)))
        return gaps
    except ValueError:
        raise ParseError(f"gaps must look like a1,b1;a2,b2, got {text!r}") from None


_VALUE_FLAGS = ("--z", "--w", "--a", "--b", "--gaps", "--order")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Let ``--z -3+1i`` through; argparse would read ``-3+1i`` as a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt is not None and re.match(r"^-[0-9.]", nxt):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylcircles", description="Weyl circles for moment problems.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--problem", choices=PROBLEMS, default="hamburger")
    p.add_argument("--z", type=parse_complex, default=complex(0, 1), help="RE+IMi (default 0+1i)")
    p.add_argument("--w", type=parse_complex, default=None, help="second kernel argument (default conj z)")
    p.add_argument("--order", type=int, default=None,
                   help="n (hamburger, stieltjes, gap, multigap) or m (interval); "
                        "defaults to the largest certified order")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--gaps", type=parse_gaps, default=None, help="a1,b1;a2,b2")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "svg"), default=None)
    p.add_argument("--input", default=None, help="moment JSON file (default or '-': stdin)")
    p.add_argument("--seed", type=int, default=0)
    return p


# --------------------------------------------------------------------- output


def _real(x: float):
    x = float(x)
    if math.isnan(x):
        return None
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x + 0.0  # drop the sign of zero


def jsonable(obj):
    """Plain JSON types; complex -> ``[re, im]``, infinities -> strings."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)) or obj is None or isinstance(obj, str):
        return bool(obj) if isinstance(obj, np.bool_) else obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _real(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_real(obj.real), _real(obj.imag)]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    # float repr is the shortest string that round-trips
    return json.dumps(jsonable(obj), sort_keys=True, allow_nan=False) + "\n"


# ---------------------------------------------------------------- input, setup


def read_moments(args, stdin) -> MomentSequence:
    try:
        if args.input not in (None, "-"):
            with open(args.input) as fh:
                doc = json.load(fh)
        else:
            doc = json.load(stdin)
    except OSError as exc:
        raise ParseError(f"cannot read input: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("values"), list):
        raise ParseError('input must be an object with a "values" array')
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in doc["values"]):
        raise ParseError("moment values must be numbers")
    return MomentSequence.from_dict(doc)


def certified_order(s: MomentSequence) -> int:
    """Largest ``n`` with ``s_0..s_{2n}`` PD and well conditioned."""
    rep = check_positivity(s)
    if rep.max_pd_order < 0:
        raise errors.NotPositiveDefinite(0, "s_0 must be positive")
    best = 0
    for k in range(min(rep.max_pd_order, MAX_ORDER) + 1):
        if rep.condition_estimates[k] <= COND_LIMIT:
            best = k
        else:
            break
    return best


def _system(s: MomentSequence, need: int, want: int) -> OrthoSystem:
    """System of order ``want`` if certifiable, else of order ``need``."""
    top = certified_order(s)
    return orthonormal_system(s, need if top < need else min(want, top))


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ParseError(f"{args.verb} --problem {args.problem} requires {' '.join(missing)}")


def _region_inputs(args, s):
    """Resolve ``(sys, order)`` for the region verbs."""
    if args.problem == "interval":
        m = args.order if args.order is not None else 2 * certified_order(s)
        n, odd = divmod(m, 2)
        need = n + 2 if odd else n
        return _system(s, need, need + 1), m
    n = args.order if args.order is not None else certified_order(s)
    return _system(s, n, n + 1), n


def build_region(args, s, validate: bool = True) -> WeylRegion:
    sys_, n = _region_inputs(args, s)
    z = args.z
    if args.problem == "hamburger":
        return hamburger_region(sys_, n, z)
    if args.problem == "stieltjes":
        _require(args, "a")
        return stieltjes_region(sys_, n, z, args.a, validate=validate)
    if args.problem == "interval":
        _require(args, "a", "b")
        return interval_region(sys_, n, z, args.a, args.b, validate=validate)
    if args.problem == "gap":
        _require(args, "a", "b")
        return gap_circles(sys_, n, z, args.a, args.b, validate=validate)
    if args.problem == "multigap":
        _require(args, "gaps")
        return multi_gap_region(sys_, n, z, args.gaps)
    raise ParseError(f"unknown problem {args.problem!r}")


def _check_upper(z: complex):
    if z.imag <= 0:
        raise errors.RealAxisZ(f"z = {z} must lie in the open upper half-plane")


# ----------------------------------------------------------------------- verbs


def cmd_ortho(args, s, out):
    n = args.order if args.order is not None else certified_order(s)
    sys_ = orthonormal_system(s, n)
    doc = {"label": s.label, "order": n, "condition": sys_.condition, **sys_.coefficient_table()}
    out.write(dumps(doc))


def cmd_kernels(args, s, out):
    n = args.order if args.order is not None else max(certified_order(s) - 1, 0)
    sys_ = _system(s, n, n + 1)
    z = args.z
    w = args.w if args.w is not None else z.conjugate()
    k = all_kernels(sys_, n, z, w)
    doc = {"order": n, "z": z, "w": w, "sum": k._asdict(), "det": None}
    if n + 1 <= sys_.N:
        doc["det"] = {kind.value: kernel_det(sys_, kind, n, z, w) for kind in KernelKind}
    out.write(dumps(doc))


def _region_doc(region: WeylRegion, full: bool) -> dict:
    doc = region.to_dict()
    if full:
        doc["arcs"] = [
            {
                "label": arc.label,
                "circle": arc.circle,
                "t_start": arc.t_start,
                "t_end": arc.t_end,
                "map": list(arc.map.coefficients),
            }
            for arc in region.arcs
        ]
        doc["meta"] = region.meta
    return doc


def cmd_circle(args, s, out, full=False):
    _check_upper(args.z)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MembershipDiagnostic)
        region = build_region(args, s)
    out.write(dumps(_region_doc(region, full)))


def cmd_boundary(args, s, out):
    _check_upper(args.z)
    region = build_region(args, s, validate=False)
    rows = boundary_samples(region, args.samples or 64)
    if args.fmt == "json":
        out.write(dumps([{"arc": lab, "t": t, "w": w} for lab, t, w in rows]))
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["arc", "t", "re", "im"])
    for label, t, w in rows:
        if cmath.isinf(w):
            continue
        writer.writerow([label, repr(t), repr(w.real + 0.0), repr(w.imag + 0.0)])
    out.write(buf.getvalue())


def solution_points(region: WeylRegion, sys_or_none, count: int, seed: int) -> list[complex]:
    """Transforms of sampled solutions: canonical mixtures or cone images."""
    rng = np.random.default_rng(seed)
    pts = []
    if region.cone is not None:
        for tau in sample_parameters(region.cone, count, rng):
            w = region.cone.map(complex(tau))
            if cmath.isfinite(w):
                pts.append(w)
        return pts
    if sys_or_none is None or region.order >= sys_or_none.N:
        return pts
    ts = np.tan(np.pi * (rng.uniform(size=(count, 2)) - 0.5))
    lams = rng.uniform(size=count)
    for (t1, t2), lam in zip(ts, lams):
        mu = mix(
            canonical_measure(sys_or_none, region.order, t1),
            canonical_measure(sys_or_none, region.order, t2),
            lam,
        )
        pts.append(complex(stieltjes_transform(mu, region.z)))
    return pts


def svg_document(region: WeylRegion, points, width: int = 480) -> str:
    """Complex plane with y pointing up and 10% padding around the geometry."""
    xs, ys = [], []
    for c in region.circles:
        xs += [c.center.real - c.radius, c.center.real + c.radius]
        ys += [c.center.imag - c.radius, c.center.imag + c.radius]
    for p in list(region.vertices) + list(points):
        xs.append(p.real)
        ys.append(p.imag)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = 0.1 * span
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    scale = width / (x1 - x0)
    height = (y1 - y0) * scale

    def px(w: complex) -> tuple[float, float]:
        return (w.real - x0) * scale, (y1 - w.imag) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.2f}" height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f'<title>{region.kind} order {region.order} at z={region.z.real:g}{region.z.imag:+g}i</title>',
    ]
    if y0 < 0 < y1:
        _, ry = px(complex(0, 0))
        lines.append(f'<line class="axis" x1="0" y1="{ry:.4f}" x2="{width:.2f}" y2="{ry:.4f}" '
                     'stroke="#999" stroke-width="0.5"/>')
    for i, c in enumerate(region.circles):
        cx, cy = px(c.center)
        lines.append(f'<circle class="circle" id="K{i + 1}" cx="{cx:.4f}" cy="{cy:.4f}" '
                     f'r="{c.radius * scale:.4f}" fill="none" stroke="#1f77b4" stroke-width="1"/>')
    for p in points:
        cx, cy = px(p)
        lines.append(f'<circle class="sample" cx="{cx:.4f}" cy="{cy:.4f}" r="1.5" fill="#2ca02c"/>')
    for v in region.vertices:
        cx, cy = px(v)
        lines.append(f'<circle class="vertex" cx="{cx:.4f}" cy="{cy:.4f}" r="3" fill="#d62728"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_plot(args, s, out):
    _check_upper(args.z)
    sys_, _ = _region_inputs(args, s)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MembershipDiagnostic)
        region = build_region(args, s)
    pts = solution_points(region, sys_, args.samples or 50, args.seed)
    if args.fmt == "json":
        out.write(dumps({"region": region.to_dict(), "points": pts}))
    else:
        out.write(svg_document(region, pts))


def _verify_tolerance() -> float:
    raw = os.environ.get("WEYL_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ParseError(f"WEYL_TOL must be a number, got {raw!r}") from None
    if not tol > 0:
        raise ParseError("WEYL_TOL must be positive")
    return tol


def spread_parameters(m: MoebiusMap, phases=(-1.0, 0.0, 1.0)) -> list[float]:
    """Real ``t`` whose images sit at well separated points of the circle.

    ``m(t)`` runs around its circle like ``1 / (t + delta/gamma)``, so
    ``t = -Re(delta/gamma) + |Im(delta/gamma)| tan(phase)`` spaces the
    images by twice the phase differences.
    """
    if m.gamma == 0:
        return [math.tan(p) for p in phases]
    r = m.delta / m.gamma
    return [-r.real + abs(r.imag) * math.tan(p) for p in phases]


def moebius_suite(rng: np.random.Generator, count: int) -> dict:
    """``image_of_real_line`` against three-point fits and on-circle samples."""
    worst_c = worst_r = worst_on = 0.0
    for _ in range(count):
        coef = rng.normal(size=4) + 1j * rng.normal(size=4)
        m = MoebiusMap(*coef)
        img = image_of_real_line(m)
        if img.variant != "circle":
            continue
        c = img.circle
        fit = circle_through(*(m(t) for t in spread_parameters(m)))
        scale = 1 + c.radius
        worst_c = max(worst_c, abs(fit.center - c.center) / scale)
        worst_r = max(worst_r, abs(fit.radius - c.radius) / scale)
        for t in rng.normal(size=20) * 5:
            worst_on = max(worst_on, abs(abs(m(t) - c.center) - c.radius) / scale)
    return {"maps": count, "center": worst_c, "radius": worst_r, "on_circle": worst_on}


def membership_suite(args, s, sys_, n, rng, count) -> dict:
    """Exact solutions inside, boundary solutions on, the Hamburger disk."""
    z = args.z if args.z.imag > 0 else complex(0, 1)
    region = hamburger_region(sys_, n, z)
    c = region.circles[0]
    inside_fail, on_circle = 0, 0.0
    for t in np.tan(np.pi * (rng.uniform(size=count) - 0.5)):
        w = complex(stieltjes_transform(canonical_measure(sys_, n, t), z))
        on_circle = max(on_circle, abs(abs(w - c.center) - c.radius) / (1 + c.radius))
    pts = solution_points(region, sys_, count, int(rng.integers(2**31)))
    inside_fail = sum(not contains(region, w) for w in pts)
    doc = {"hamburger": {"samples": len(pts), "outside": inside_fail, "boundary_on_circle": on_circle}}
    if args.problem != "hamburger":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", MembershipDiagnostic)
            reg = build_region(args, s, validate=False)
        if reg.cone is not None and reg.meta.get("certified", True):
            bad, excess = validate_membership(reg, count, seed=int(rng.integers(2**31)))
            doc[args.problem] = {"samples": count, "outside": bad, "max_excess": excess}
    return doc


def cmd_verify(args, s, out) -> int:
    tol = _verify_tolerance()
    top = certified_order(s)
    n = args.order if args.order is not None else max(top - 1, 0)
    sys_ = _system(s, n, n + 1)
    count = args.samples or 100
    rng = np.random.default_rng(args.seed)

    quads = random_quadruples(rng, count)
    rel = relation_residuals(sys_, n, quads)
    dd = 0.0
    for quad in quads:
        vals = rng.normal(size=8) + 1j * rng.normal(size=8)
        lhs, rhs = double_det(*vals)
        dd = max(dd, abs(lhs - rhs) / (1 + abs(rhs)))
    sd = None
    if n + 1 <= sys_.N:
        sd = 0.0
        for z, w, *_ in quads:
            k = all_kernels(sys_, n, z, w)
            for kind in KernelKind:
                ref = getattr(k, kind.value)
                sd = max(sd, abs(kernel_det(sys_, kind, n, z, w) - ref) / (1 + abs(ref)))
    mob = moebius_suite(rng, count)
    memb = membership_suite(args, s, sys_, n, rng, count) if n < sys_.N else {}

    checks = {f"relation_{rid}": rel.residuals[rid] <= tol for rid in RELATION_IDS}
    checks["double_det"] = dd <= tol
    if sd is not None:
        checks["sum_vs_det"] = sd <= tol
    checks["moebius"] = max(mob["center"], mob["radius"], mob["on_circle"]) <= tol
    for name, res in memb.items():
        checks[f"membership_{name}"] = res["outside"] == 0 and res.get("boundary_on_circle", 0.0) <= tol
    ok = all(checks.values())
    report = {
        "pass": ok,
        "tolerance": tol,
        "order": n,
        "seed": args.seed,
        "checks": checks,
        "relations": rel.to_json(),
        "double_det": dd,
        "sum_vs_det": sd,
        "moebius": mob,
        "membership": memb,
    }
    out.write(dumps(report))
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        argv = list(sys.argv[1:] if argv is None else argv)
        args = build_parser().parse_args(_glue_negative_values(argv))
        fmt = args.fmt or FORMATS[args.verb][0]
        if fmt not in FORMATS[args.verb]:
            raise ParseError(f"{args.verb} does not support --format {fmt}")
        args.fmt = fmt
        if args.samples is not None and args.samples < 2:
            raise ParseError("--samples must be at least 2")
        s = read_moments(args, stdin)
        if args.verb == "ortho":
            cmd_ortho(args, s, stdout)
        elif args.verb == "kernels":
            cmd_kernels(args, s, stdout)
        elif args.verb in ("circle", "region"):
            cmd_circle(args, s, stdout, full=args.verb == "region")
        elif args.verb == "boundary":
            cmd_boundary(args, s, stdout)
        elif args.verb == "plot":
            cmd_plot(args, s, stdout)
        else:
            return cmd_verify(args, s, stdout)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except errors.WeylError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_LIBRARY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
