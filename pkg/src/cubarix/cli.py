"""Command-line interface: ``cubarix <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 validation error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .complexes import (CubicalFacePoset, GridCubicalComplex, SimplicialComplex,
                        barycentric_sd, complex_from_json, euler_char_reduced, validate_cubical)
from .errors import BudgetError, ComplexError, CubicalityError, InputParseError, enumeration_budget
from .eulerian import DESCENTS_MAX_A, DESCENTS_MAX_B, eulerian_A, eulerian_B
from .hvector import cubical_h, cubical_h_alt, simplicial_h
from .pbnk import DEF_MAX_N, route_table
from .polynomial import Poly, pretty, to_json
from .realroots import certify_corollary, interlaces, is_real_rooted
from .suites import SUITES
from .transform import check_proof_identity, transform_routes

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET = 0, 1, 2, 3, 4


class VerificationFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__("verification failed")
        self.payload = payload


# -- output -------------------------------------------------------------

def _plain(obj):
    """Convert Polys (and nested containers of them) to JSON-ready values."""
    if isinstance(obj, Poly):
        return to_json(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def _pretty_lines(obj, indent: str = "") -> list[str]:
    lines = []
    for key, value in obj.items():
        if isinstance(value, Poly):
            lines.append(f"{indent}{key}: {pretty(value)}")
        elif isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines += _pretty_lines(value, indent + "  ")
        elif isinstance(value, list) and value and all(isinstance(v, Poly) for v in value):
            lines.append(f"{indent}{key}:")
            lines += [f"{indent}  [{i}] {pretty(v)}" for i, v in enumerate(value)]
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def emit(payload: dict, fmt: str, rows: list[list] | None = None) -> str:
    if fmt == "json":
        return json.dumps(_plain(payload), sort_keys=True, indent=2)
    if fmt == "pretty":
        return "\n".join(_pretty_lines(payload))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if rows is None:
            rows = [["key", "value"]] + [[k, json.dumps(_plain(v), sort_keys=True)]
                                         for k, v in payload.items()]
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}")


# -- input --------------------------------------------------------------

def load_complex(path: str):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputParseError(f"cannot read {path}: {exc}") from exc
    c = complex_from_json(doc)
    if isinstance(c, CubicalFacePoset):
        report = validate_cubical(c)
        if not report.ok:
            raise CubicalityError(f"cell {report.failing_cell!r}: {report.reason}")
    return c


def _require_cubical(c) -> None:
    if isinstance(c, SimplicialComplex):
        raise ComplexError("this command needs a cubical complex (grid or poset input)")


# -- commands -----------------------------------------------------------

def cmd_pbnk(args) -> tuple[dict, list | None]:
    n = args.n
    budget = enumeration_budget(args.budget)
    rec = route_table(n, "rec")
    status = {}
    for route in ("gf", "step"):
        status[route] = route_table(n, route) == rec
    if n <= DEF_MAX_N and 3 ** n <= budget:
        status["def"] = route_table(n, "def") == rec
    else:
        status["def"] = "skipped"
    agree = all(v is True for v in status.values() if v != "skipped")
    payload = {"n": n, "polynomials": rec, "routes": status, "agree": agree}
    ks = range(n + 2)
    if args.k is not None:
        if not 0 <= args.k <= n + 1:
            raise InputParseError(f"--k must lie in 0..{n + 1}")
        ks = [args.k]
        payload = {"n": n, "k": args.k, "polynomial": rec[args.k], "routes": status,
                   "agree": agree}
    rows = [["k"] + [f"x^{i}" for i in range(n + 2)]]
    rows += [[k] + [str(rec[k][i]) for i in range(n + 2)] for k in ks]
    if not agree:
        raise VerificationFailed(payload)
    return payload, rows


def cmd_eulerian(args) -> tuple[dict, list | None]:
    n, kind = args.n, args.type
    fn, limit = (eulerian_B, DESCENTS_MAX_B) if kind == "B" else (eulerian_A, DESCENTS_MAX_A)
    p = fn(n)
    agree = fn(n, "descents") == p if n <= limit else "skipped"
    payload = {"type": kind, "n": n, "polynomial": p, "descents_agree": agree}
    if agree is False:
        raise VerificationFailed(payload)
    return payload, [["i", "coefficient"]] + [[i, str(a)] for i, a in enumerate(p.coeffs)]


def cmd_hvec(args) -> tuple[dict, None]:
    c = load_complex(args.input)
    payload = {"f_vector": c.f_vector(), "dimension": c.dimension,
               "reduced_euler_characteristic": euler_char_reduced(c)}
    if isinstance(c, SimplicialComplex):
        payload["kind"] = "simplicial"
        payload["h"] = simplicial_h(c)
        return payload, None
    payload["kind"] = "grid" if isinstance(c, GridCubicalComplex) else "poset"
    h = cubical_h(c)
    payload["cubical_h"] = h
    payload["cubical_h_alt_agrees"] = h == cubical_h_alt(c)
    payload["observed_nonnegative"] = h.is_nonnegative()
    if not payload["cubical_h_alt_agrees"]:
        raise VerificationFailed(payload)
    return payload, None


def cmd_sd(args) -> tuple[dict, None]:
    c = load_complex(args.input)
    sd = barycentric_sd(c, args.budget)
    return {"dimension": c.dimension, "sd_f_vector": sd.f_vector(),
            "sd_h": simplicial_h(sd, c.dimension)}, None


def cmd_transform(args) -> tuple[dict, None]:
    c = load_complex(args.input)
    _require_cubical(c)
    n = c.dimension
    routes = transform_routes(c, args.budget)
    agree = len(set(routes.values())) == 1
    H = routes["from_cubical_h"]
    h = cubical_h(c)
    cert = interlaces(eulerian_B(n), H) if h.is_nonnegative() else None
    payload = {
        "dimension": n,
        "pure": c.is_pure(),
        "f_vector": c.f_vector(),
        "cubical_h": h,
        "h_sd": routes,
        "routes_agree": agree,
        "a_L_identity": check_proof_identity(c),
        "real_rooted": is_real_rooted(H).real_rooted,
        "interlaced_by_B_n": cert.interlaces if cert else "hypothesis fails",
    }
    if cert is not None:
        payload["interlacing_certificate"] = cert.to_json()
    if not agree or not payload["a_L_identity"]:
        raise VerificationFailed(payload)
    return payload, None


def cmd_certify(args) -> tuple[dict, None]:
    c = load_complex(args.input)
    _require_cubical(c)
    report = certify_corollary(c)
    payload = report.to_json()
    if not report.ok:
        raise VerificationFailed(payload)
    return payload, None


def cmd_verify(args) -> tuple[dict, None]:
    suite = SUITES[args.suite]
    kw = {}
    if args.suite in ("pbnk-props", "worpitzky", "peaks") and args.n_max is not None:
        kw["n_max"] = args.n_max
    if args.suite == "worpitzky" and args.m_max is not None:
        kw["m_max"] = args.m_max
    if args.suite in ("transform-corpus", "corollary", "simplicial-remark"):
        kw["seed"] = args.seed
        if args.corpus == "builtin":
            if args.suite != "simplicial-remark":
                kw.update(random_grids=0, random_covers=0)
        if args.suite in ("transform-corpus", "simplicial-remark"):
            kw["budget"] = args.budget
    result = suite(**kw)
    payload = result.to_json()
    if not result.ok:
        raise VerificationFailed(payload)
    return payload, None


COMMANDS = {
    "pbnk": cmd_pbnk,
    "eulerian": cmd_eulerian,
    "hvec": cmd_hvec,
    "sd": cmd_sd,
    "transform": cmd_transform,
    "certify": cmd_certify,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubarix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--budget", type=int, default=None,
                       help="max cells before chain enumeration (env CUBARIX_BUDGET)")

    p = sub.add_parser("pbnk", help="table of p^B_{n,k} with route agreement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="report only this column")
    common(p)
    p = sub.add_parser("eulerian", help="Eulerian polynomial of type A or B")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", choices=("A", "B"), default="B")
    common(p)
    for name, text in (("hvec", "f-vector and h-vector of a complex"),
                       ("sd", "barycentric subdivision statistics"),
                       ("transform", "h(sd L) by every route, with certificates"),
                       ("certify", "real-rootedness and interlacing certificate")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--input", required=True, metavar="FILE")
        common(p)
    p = sub.add_parser("verify", help="run a verification battery")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--corpus", choices=("builtin", "full"), default="full")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= getattr(args, "seed", 0) < 2 ** 64:
        parser.error("--seed must fit in an unsigned 64-bit integer")
    for flag in ("n", "n_max", "m_max"):
        if (getattr(args, flag, None) or 0) < 0:
            parser.error(f"--{flag.replace('_', '-')} must be nonnegative")
    if args.budget is not None and args.budget <= 0:
        parser.error("--budget must be positive")
    fmt = args.format
    try:
        payload, rows = COMMANDS[args.command](args)
    except VerificationFailed as exc:
        print(emit(exc.payload, fmt))
        return EXIT_VERIFY
    except InputParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ComplexError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(emit(payload, fmt, rows))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
