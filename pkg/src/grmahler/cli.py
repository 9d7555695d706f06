"""Command-line front end.

Every run emits one deterministic artifact: a JSON object

    {"command": ..., "group": ..., "poly": ..., "lambda": ..., "method": ...,
     "value": ..., "error_bound": ..., "extra": {...}}

or, with --format csv, a table with a header row.  Numeric fields are
printed with 15 significant digits.  Exit codes: 0 ok, 2 parse error,
3 domain error (lambda out of disc, singular determinant, ...), 4 resource
cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import experiments as ex
from . import genfun as gf
from . import groups as gr
from . import mahler as mh
from . import ring as rg
from . import spectra as sp
from .errors import DomainError, GrmahlerError, ParseError, ResourceLimitError
from .parsing import parse_group, parse_poly, to_ring_element

DEFAULT_EPSILON = 1e-10


@dataclass
class JobConfig:
    """Validated per-run settings; defaults are documented in --help."""

    command: str
    group: str | None = None
    poly: str | None = None
    lam: float | None = None
    epsilon: float = DEFAULT_EPSILON
    grid: int | None = None
    n: int | None = None
    n_max: int | None = None
    support_cap: int = rg.DEFAULT_SUPPORT_CAP
    fmt: str = "json"
    out: str | None = None


# ---------------------------------------------------------------------------
# deterministic serialization


def format_number(x) -> str:
    """15 significant digits for floats; exact integers stay integers."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        x = float(x)
    if isinstance(x, float):
        if math.isinf(x):
            return '"infinite"'
        if x == 0.0:
            return "0"
        return f"{x:.15g}"
    raise TypeError(f"not a number: {x!r}")


def render_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (bool, int, float, Fraction)):
        return format_number(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        inner = ", ".join(
            f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items()
        )
        return "{" + inner + "}"
    raise TypeError(f"cannot serialize {obj!r}")


def render_csv(header: list[str], rows: list[list]) -> str:
    def cell(v) -> str:
        if v is None:
            return ""
        if isinstance(v, str):
            return v
        return format_number(v).strip('"')

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines)


def _result_object(cfg: JobConfig, method, value, error_bound, extra) -> dict:
    return {
        "command": cfg.command,
        "group": cfg.group,
        "poly": cfg.poly,
        "lambda": cfg.lam,
        "method": method,
        "value": value,
        "error_bound": error_bound,
        "extra": extra,
    }


# ---------------------------------------------------------------------------
# subcommand implementations; each returns (json_obj, csv_header, csv_rows)


def _bind(cfg: JobConfig):
    group = parse_group(cfg.group)
    poly = to_ring_element(parse_poly(cfg.poly), group)
    return group, poly


def run_measure(cfg: JobConfig, allow_continuation: bool, method: str):
    group, poly = _bind(cfg)
    if method == "auto":
        if cfg.lam is None:
            method = "general"
        elif gr.is_finite(group):
            method = "finite"
        else:
            method = "series"
    if method == "general":
        res = mh.mahler_general(group, poly, epsilon=cfg.epsilon)
        extra = {"group_order": gr.order(group)}
        if gr.is_finite(group):
            B = sp.cayley_adjacency(group, rg.mul(poly, rg.star(poly)))
            extra["determinant"] = sp.det_hermitian(B)
        else:
            extra["internal_lambda"] = res.lam
    elif method == "finite":
        res = mh.mahler_finite(group, poly, cfg.lam, allow_continuation)
        extra = {
            "group_order": gr.order(group),
            "imaginary_discard": res.imaginary_discard,
        }
    elif method == "series":
        if cfg.lam is None:
            raise DomainError("series measure needs an explicit --lambda")
        res = mh.mahler_series(
            group, poly, cfg.lam, cfg.epsilon, support_cap=cfg.support_cap
        )
        extra = {"imaginary_discard": res.imaginary_discard}
    elif method == "torus":
        if cfg.lam is None:
            raise DomainError("torus quadrature needs an explicit --lambda")
        res = mh.mahler_torus(poly, cfg.lam, cfg.grid)
        extra = {"grid": cfg.grid}
    else:
        raise DomainError(f"unknown measure method {method!r}")
    obj = _result_object(cfg, res.method, res.value, res.error_bound, extra)
    return obj, ["method", "value", "error_bound"], [[res.method, res.value, res.error_bound]]


def run_coeffs(cfg: JobConfig):
    group, poly = _bind(cfg)
    n = cfg.n if cfg.n is not None else 8
    series = rg.power_constant_coeffs(poly, n, support_cap=cfg.support_cap)
    values = [_coeff_out(v) for v in series.values]
    obj = _result_object(
        cfg,
        "group-ring-powering",
        None,
        0,
        {"coeffs": values, "l1_bound": series.l1_bound},
    )
    rows = [[i, v] for i, v in enumerate(values)]
    return obj, ["n", "a_n"], rows


def _coeff_out(v):
    if isinstance(v, complex):
        return v.real if v.imag == 0 else str(v)
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return v
    return str(v)


def run_spectrum(cfg: JobConfig):
    group, poly = _bind(cfg)
    A = sp.cayley_adjacency(group, poly)
    spec = sp.hermitian_eigenvalues(A)
    obj = _result_object(
        cfg,
        "jacobi",
        None,
        0,
        {"eigenvalues": list(spec.eigenvalues), "n": spec.n},
    )
    rows = [[i, v] for i, v in enumerate(spec.eigenvalues)]
    return obj, ["index", "eigenvalue"], rows


def run_u(cfg: JobConfig):
    group, poly = _bind(cfg)
    if cfg.lam is None:
        raise DomainError("u needs an explicit --lambda")
    val = mh.u_series(group, poly, cfg.lam, cfg.epsilon)
    obj = _result_object(
        cfg, "series", val.real, cfg.epsilon, {"imag": val.imag}
    )
    return obj, ["value", "imag"], [[val.real, val.imag]]


def run_compare(cfg: JobConfig, group_b: str):
    g_a = parse_group(cfg.group)
    g_b = parse_group(group_b)
    poly = to_ring_element(parse_poly(cfg.poly), g_a)
    res = ex.compare_groups(g_a, g_b, poly, cfg.lam, epsilon=cfg.epsilon)
    obj = _result_object(
        cfg,
        "compare",
        None,
        0,
        {
            "group_b": group_b,
            "value_a": res.value_a,
            "value_b": res.value_b,
            "verdict": res.verdict,
        },
    )
    rows = [[cfg.group, group_b, res.value_a, res.value_b, res.verdict]]
    return obj, ["group_a", "group_b", "value_a", "value_b", "verdict"], rows


def run_converge(cfg: JobConfig, chain: str, params: list[int]):
    if cfg.lam is None:
        raise DomainError("converge needs an explicit --lambda")
    if chain == "abelian":
        group, poly = _bind(cfg)
        l = gr.num_generators(group)
        rows = ex.converge_abelian(poly, cfg.lam, [(m,) * l for m in params])
    else:
        group = parse_group(cfg.group) if cfg.group else gr.Dihedral(0)
        poly = to_ring_element(parse_poly(cfg.poly), group)
        rows = ex.converge_quotients(chain, poly, cfg.lam, params)
    data = [
        {
            "parameter": r.parameter,
            "value": r.value,
            "gap": r.gap,
            "limit_method": r.limit_method,
            "q": _q_out(r.q),
        }
        for r in rows
    ]
    obj = _result_object(cfg, "converge-" + chain, None, 0, {"rows": data})
    csv_rows = [
        [r.parameter, r.value, r.gap, r.limit_method, _q_out(r.q)] for r in rows
    ]
    return obj, ["parameter", "value", "gap", "limit_method", "q"], csv_rows


def _q_out(q):
    if q is math.inf:
        return "infinite"
    return q


def run_agree_depth(cfg: JobConfig, group_b: str):
    g_a = parse_group(cfg.group)
    g_b = parse_group(group_b)
    poly = to_ring_element(parse_poly(cfg.poly), g_b if not gr.is_finite(g_b) else g_a)
    n_max = cfg.n_max if cfg.n_max is not None else 12
    rep = ex.agreement_depth(g_a, g_b, poly, n_max)
    pairs = [[_coeff_out(a), _coeff_out(b)] for a, b in rep.coeff_pairs]
    obj = _result_object(
        cfg,
        "agree-depth",
        None,
        0,
        {
            "group_b": group_b,
            "first_disagreement": rep.first_disagreement,
            "n_max": rep.n_max,
            "coeff_pairs": pairs,
        },
    )
    rows = [
        [n, a, b, "yes" if a == b else "no"]
        for n, (a, b) in enumerate(rep.coeff_pairs)
    ]
    return obj, ["n", "a_n_a", "a_n_b", "equal"], rows


def run_genfun(cfg: JobConfig, series: str, degree: int | None):
    n = cfg.n if cfg.n is not None else 10
    if series == "tree":
        if degree is None:
            raise DomainError("tree series needs --degree")
        s = gf.tree_walk_series(degree)
        name = f"tree-{degree}"
    elif series == "free":
        if degree is None:
            raise DomainError("free series needs --degree (the rank)")
        s = gf.u_free(degree)
        name = f"free-{degree}"
    elif series == "free-p2":
        if degree is None:
            raise DomainError("free-p2 series needs --degree (the l parameter)")
        s = gf.u_free_p2(degree)
        name = f"free-p2-{degree}"
    elif series == "psl2-xyy":
        s = gf.u_psl2("x+y+y^-1")
        name = "psl2-xyy"
    elif series == "psl2-2xyy":
        s = gf.u_psl2("2x+y+y^-1")
        name = "psl2-2xyy"
    elif series == "z2":
        coeffs = gf.z2_walk_coeffs(n)
        obj = _result_object(cfg, "closed-form", None, 0, {"series": "z2", "coeffs": coeffs})
        return obj, ["n", "coeff"], [[i, c] for i, c in enumerate(coeffs)]
    else:
        raise DomainError(f"unknown series {series!r}")
    coeffs = s.coeffs(n)
    obj = _result_object(cfg, "closed-form", None, 0, {"series": name, "coeffs": coeffs})
    return obj, ["n", "coeff"], [[i, c] for i, c in enumerate(coeffs)]


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grmahler",
        description="Mahler measures of group-ring elements over a group catalogue.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, group=True, poly=True, lam=True):
        if group:
            p.add_argument("--group", required=True, help="group specifier, e.g. Z/3xZ/2, D5, F2")
        if poly:
            p.add_argument("--poly", required=True, help='polynomial, e.g. "1+x+y"')
        if lam:
            p.add_argument("--lambda", dest="lam", type=float, default=None)
        p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
        p.add_argument("--support-cap", dest="support_cap", type=int,
                       default=rg.DEFAULT_SUPPORT_CAP,
                       help="abort powering beyond this many stored terms")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write the artifact to a file")

    p = sub.add_parser("measure", help="Mahler measure m(P, lambda) or m(Q)")
    common(p)
    p.add_argument("--method", choices=("auto", "finite", "series", "general", "torus"), default="auto")
    p.add_argument("--grid", type=int, default=None, help="torus grid size per dimension")
    p.add_argument("--allow-continuation", action="store_true")

    p = sub.add_parser("coeffs", help="walk-count coefficients a_n = [P^n]_0")
    common(p, lam=False)
    p.add_argument("--n", type=int, default=8)

    p = sub.add_parser("spectrum", help="eigenvalues of the weighted Cayley adjacency")
    common(p, lam=False)

    p = sub.add_parser("u", help="walk generating function u(P, lambda)")
    common(p)

    p = sub.add_parser("compare", help="measure over two groups and compare")
    common(p)
    p.add_argument("--group-b", required=True)

    p = sub.add_parser("converge", help="finite-model convergence sweeps")
    common(p)
    p.add_argument("--chain", choices=("abelian", "dihedral", "dicyclic", "zxzm"), required=True)
    p.add_argument("--params", required=True, help="comma-separated sizes, e.g. 4,8,16,32")

    p = sub.add_parser("agree-depth", help="first index where walk counts disagree")
    common(p, lam=False)
    p.add_argument("--group-b", required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=12)

    p = sub.add_parser("genfun", help="closed-form series coefficients")
    p.add_argument("--series", required=True,
                   choices=("tree", "free", "free-p2", "psl2-xyy", "psl2-2xyy", "z2"))
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    return ap


def _dispatch(args) -> tuple[dict, list, list]:
    cfg = JobConfig(
        command=args.command,
        group=getattr(args, "group", None),
        poly=getattr(args, "poly", None),
        lam=getattr(args, "lam", None),
        epsilon=getattr(args, "epsilon", DEFAULT_EPSILON),
        grid=getattr(args, "grid", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        support_cap=getattr(args, "support_cap", rg.DEFAULT_SUPPORT_CAP),
        fmt=args.fmt,
        out=args.out,
    )
    if args.command == "measure":
        return run_measure(cfg, args.allow_continuation, args.method)
    if args.command == "coeffs":
        return run_coeffs(cfg)
    if args.command == "spectrum":
        return run_spectrum(cfg)
    if args.command == "u":
        return run_u(cfg)
    if args.command == "compare":
        return run_compare(cfg, args.group_b)
    if args.command == "converge":
        params = [int(p) for p in args.params.split(",") if p.strip()]
        if not params:
            raise ParseError("empty --params list")
        return run_converge(cfg, args.chain, params)
    if args.command == "agree-depth":
        return run_agree_depth(cfg, args.group_b)
    if args.command == "genfun":
        return run_genfun(cfg, args.series, args.degree)
    raise ParseError(f"unknown command {args.command!r}")


def _exit_code(err: GrmahlerError) -> int:
    if isinstance(err, ParseError):
        return 2
    if isinstance(err, ResourceLimitError):
        return 4
    return 3


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        obj, header, rows = _dispatch(args)
    except GrmahlerError as err:
        payload = render_json(
            {"error": {"type": type(err).__name__, "message": str(err)}}
        )
        print(payload, file=sys.stderr)
        return _exit_code(err)
    except ValueError as err:
        payload = render_json({"error": {"type": "ValueError", "message": str(err)}})
        print(payload, file=sys.stderr)
        return 3
    text = render_json(obj) if args.fmt == "json" else render_csv(header, rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
