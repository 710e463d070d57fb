"""Command-line front end.

Exit codes: 0 all checks pass, 1 some check fails, 2 bad input, 3 inconclusive
without failure. Polynomials are read and written as ascending coefficient
lists, e.g. ``1,-3,1`` for ``x^2 - 3x + 1``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .errors import InconclusiveError, InputError, NotDominant, NotHyperbolic, StretchFactorError
from .graphspec import (
    Graph,
    StarlikeTree,
    char_poly_adjacency,
    classify_coxeter,
    nu_poly as tree_nu_poly,
    realize_starlike,
    spectral_radius,
    tree_salem_poly,
)
from .homology import (
    TwistWord,
    action,
    char_poly,
    curve_classes_chain,
    homological_stretch,
    xtrain_curve_classes,
)
from .intpoly import (
    AlgebraicReal,
    IntPoly,
    classify_number,
    largest_real_root,
    power_min_poly,
    prove_irreducible_one_big_root,
    unit_circle_location,
)
from .thurston import CurveSystem, classify_word, nu, nu_min_factor, nu_poly, standard_system, stretch_TATB
from .verify import (
    Outcome,
    VerificationReport,
    combine,
    load_tables,
    parse_tables,
    verify_cover_degrees,
    verify_homology_diagnostic,
    verify_limit,
    verify_monotone,
    verify_tables,
    verify_theorem_A,
    verify_theorem_B,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3
CACHE_ENV = "STRETCHFACTOR_CACHE_DIR"

_EXIT_FOR = {Outcome.PASS: EXIT_OK, Outcome.DIAGNOSTIC: EXIT_OK, Outcome.FAIL: EXIT_FAIL, Outcome.INCONCLUSIVE: EXIT_INCONCLUSIVE}


# -- argument helpers ------------------------------------------------------------


def _int_range(text: str) -> list[int]:
    """``5``, ``2..10`` or ``2,4,8``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _standard(text: str) -> tuple[int, int]:
    try:
        g, k = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected g,k") from None
    return g, k


def _poly(text: str) -> IntPoly:
    return IntPoly.parse(text)


# -- subcommands -----------------------------------------------------------------
# Each returns (payload, exit code). Payloads hold only JSON-ready values.


def _real(a: AlgebraicReal, decimals: int) -> dict:
    a = a.refine(Fraction(1, 10**decimals))
    return {"value": a.decimal(decimals), "interval": [str(a.lo), str(a.hi)], "defining": list(a.defining.coeffs)}


def _system_from_args(args) -> CurveSystem:
    if args.matrix:
        return CurveSystem.parse(args.matrix_text)
    if args.standard:
        return standard_system(*args.standard)
    if args.g is None or args.k is None:
        raise InputError("give --g and --k, --standard g,k or --matrix FILE")
    return standard_system(args.g, args.k)


def cmd_construct(args) -> tuple[dict, int]:
    sys_ = _system_from_args(args)
    out: dict[str, Any] = {
        "matrix": [list(r) for r in sys_.matrix],
        "rows": list(sys_.names_a),
        "columns": list(sys_.names_b),
        "nu_poly": list(nu_poly(sys_).coeffs),
        "nu_min_factor": list(nu_min_factor(sys_).coeffs),
        "nu": _real(nu(sys_), args.decimals),
        "fills": "asserted" if sys_.fills else "conditional on filling",
    }
    try:
        lam = stretch_TATB(sys_)
    except NotHyperbolic as exc:
        out["stretch"] = None
        out["note"] = str(exc)
    else:
        out["salem_poly"] = list(lam.defining.coeffs)
        out["stretch"] = _real(lam, args.decimals)
    if args.word:
        out["word"] = {"word": args.word, **classify_word(sys_, args.word).as_dict(args.decimals)}
    return out, EXIT_OK


def cmd_tree(args) -> tuple[dict, int]:
    if args.graph:
        g = Graph.parse(args.graph_text)
        out: dict[str, Any] = {"vertices": g.n, "edges": sorted(list(e) for e in g.edges)}
        t = None
    elif args.arms:
        t = StarlikeTree.parse(args.arms)
        g = realize_starlike(t)
        out = {"tree": str(t), "vertices": g.n}
    else:
        raise InputError("give --arms n1,n2,... or --graph FILE")
    out["adjacency_poly"] = list(char_poly_adjacency(g).coeffs)
    out["spectral_radius"] = _real(spectral_radius(g), args.decimals)
    out["class"] = classify_coxeter(g).value
    if t is not None:
        out["nu_poly"] = list(tree_nu_poly(g).coeffs)
        try:
            sp = tree_salem_poly(t)
        except NotDominant:
            out["salem_poly"] = None
        else:
            out["salem_poly"] = list(sp.coeffs)
            out["stretch"] = _real(largest_real_root(sp), args.decimals)
    return out, EXIT_OK


def cmd_homology(args) -> tuple[dict, int]:
    table = curve_classes_chain(args.g) if args.table == "chain" else xtrain_curve_classes(args.g)
    word = TwistWord.parse(args.word)
    m = action(word, table, args.g)
    rho = homological_stretch(m)
    out: dict[str, Any] = {
        "genus": args.g,
        "word": str(word),
        "table": args.table,
        "matrix": [list(r) for r in m.matrix],
        "symplectic": m.is_symplectic(),
        "char_poly": list(char_poly(m).coeffs),
    }
    if isinstance(rho, AlgebraicReal):
        out["lambda_H"] = {"exact": True, **_real(rho, args.decimals)}
    else:
        out["lambda_H"] = {"exact": False, "value": rho.decimal(args.decimals), "interval": [str(rho.lo), str(rho.hi)]}
    return out, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    p = args.poly
    out: dict[str, Any] = {"poly": list(p.coeffs), "degree": p.degree, "display": str(p)}
    out["location"] = unit_circle_location(p).as_dict()
    out["class"] = classify_number(p).tag.value
    out["certificate"] = prove_irreducible_one_big_root(p).as_dict()
    top = largest_real_root(p)
    out["largest_real_root"] = _real(top, args.decimals) if top is not None else None
    return out, EXIT_OK


def cmd_power(args) -> tuple[dict, int]:
    q = power_min_poly(args.poly, args.k)
    return {"poly": list(args.poly.coeffs), "k": args.k, "power_poly": list(q.coeffs), "display": str(q)}, EXIT_OK


def _reports_payload(reports: Sequence[VerificationReport]) -> tuple[dict, int]:
    verdict = combine(r.verdict for r in reports)
    return {"verdict": verdict.value, "reports": [r.as_dict() for r in reports]}, _EXIT_FOR[verdict]


def _run_jobs(jobs: list[tuple[Callable, tuple]], workers: int) -> list[VerificationReport]:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*a) for fn, a in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *a) for fn, a in jobs]
        return [f.result() for f in futures]


def cmd_verify(args) -> tuple[dict, int]:
    what = args.check
    if what == "theorem-a":
        jobs = [(verify_theorem_A, (g, k)) for g in args.g for k in args.k]
    elif what == "theorem-b":
        jobs = [(verify_theorem_B, (args.gmax,))]
    elif what == "limit":
        jobs = [(verify_limit, (args.k, args.delta, args.g)), (verify_monotone, (args.k, args.g))]
    elif what == "covers":
        jobs = [(verify_cover_degrees, (g, args.kmax)) for g in args.g]
    else:
        rows = parse_tables(args.file_text.splitlines()) if args.file else load_tables()
        jobs = [(verify_tables, (rows,))]
        if args.homology:
            jobs.append((verify_homology_diagnostic, (rows,)))
    return _reports_payload(_run_jobs(jobs, args.jobs))


# -- output --------------------------------------------------------------------


def render_human(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.extend(render_human(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                lines.extend(render_human(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _flat(val) -> bool:
    return isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val)


def _scalar(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(v) for v in val) + "]"
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    return str(val)


# -- cache -------------------------------------------------------------------------


def _cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "stretchfactor"


# presentation-only flags; input files enter the key by content, not path
_NOT_CACHE_KEYS = {"json", "cache_dir", "no_cache", "jobs", "output", "handler", "matrix", "file", "graph"}


def _read_inputs(args) -> None:
    for name in ("matrix", "file", "graph"):
        path = getattr(args, name, None)
        setattr(args, f"{name}_text", Path(path).read_text() if path else None)


def cache_key(args) -> str:
    canon = {k: _canon(v) for k, v in sorted(vars(args).items()) if k not in _NOT_CACHE_KEYS}
    blob = json.dumps({"args": canon, "version": __version__}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _canon(v):
    if isinstance(v, IntPoly):
        return list(v.coeffs)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_canon(x) for x in v]
    return v


def _cached_run(args) -> tuple[dict, int]:
    root = _cache_dir(args)
    path = None
    if root is not None:
        path = root / f"{cache_key(args)}.json"
        if path.is_file():
            try:
                stored = json.loads(path.read_text())
                return stored["payload"], stored["exit"]
            except (ValueError, KeyError):
                pass  # corrupt entry: recompute
    payload, code = args.handler(args)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            # unique temp name so concurrent runs never share a partial file
            with tempfile.NamedTemporaryFile("w", dir=path.parent, suffix=".tmp", delete=False) as fh:
                fh.write(json.dumps({"payload": payload, "exit": code}))
            Path(fh.name).replace(path)
        except OSError:
            pass  # a read-only cache is not an error
    return payload, code


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--decimals", type=int, default=6, help="digits for decimal values")
    common.add_argument("--cache-dir", help=f"result cache directory (default ${CACHE_ENV} or ~/.cache/stretchfactor)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("-o", "--output", help="also write the report to this file")

    parser = argparse.ArgumentParser(prog="stretchfactor", description="Exact checks for multitwist stretch factors.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="curve system, nu and the stretch factor of T_A T_B")
    p.add_argument("--g", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--standard", type=_standard, help="g,k")
    p.add_argument("--matrix", help="file with rows of intersection numbers")
    p.add_argument("--word", help="word over A a B b to classify")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("tree", parents=[common], help="spectrum and Salem polynomial of a starlike tree")
    p.add_argument("--arms", help="arm lengths n1,n2,... or T:n1,n2,...")
    p.add_argument("--graph", help="file: vertex count, then one 'u v' edge per line")
    p.set_defaults(handler=cmd_tree)

    p = sub.add_parser("homology", parents=[common], help="action of a twist word on first homology")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--word", required=True, help="e.g. c1c2d1D2 (uppercase = inverse)")
    p.add_argument("--table", choices=("chain", "xtrain"), default="chain")
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser("classify", parents=[common], help="root location, class and irreducibility certificate")
    p.add_argument("--poly", type=_poly, required=True, help="ascending coefficients")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("power", parents=[common], help="polynomial of k-th powers of the roots")
    p.add_argument("--poly", type=_poly, required=True, help="ascending coefficients of a monic polynomial")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_power)

    p = sub.add_parser("verify", help="run a verification pipeline")
    checks = p.add_subparsers(dest="check", required=True)
    c = checks.add_parser("theorem-a", parents=[common], help="three routes to the stretch factor of f_{g,k}")
    c.add_argument("--g", type=_int_range, default=_int_range("2..10"))
    c.add_argument("--k", type=_int_range, default=_int_range("3..6"))
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c = checks.add_parser("theorem-b", parents=[common], help="irreducibility certificates for p_g")
    c.add_argument("--gmax", type=int, default=10)
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c = checks.add_parser("limit", parents=[common], help="root of p_{g,k} just below k - 1")
    c.add_argument("--k", type=int, default=4)
    c.add_argument("--delta", type=_fraction, default=Fraction(1, 1000))
    c.add_argument("--g", type=int, default=10)
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c = checks.add_parser("covers", parents=[common], help="degrees of powers of cover stretch factors")
    c.add_argument("--g", type=_int_range, default=_int_range("4,5,8,10"))
    c.add_argument("--kmax", type=int, default=6)
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    c = checks.add_parser("tables", parents=[common], help="published example tables")
    c.add_argument("--file", help="JSON-lines dataset (default: bundled tables)")
    c.add_argument("--homology", action="store_true", help="add the non-gating homology diagnostic")
    c.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _read_inputs(args)
        payload, code = _cached_run(args)
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (StretchFactorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(payload, indent=2) if args.json else "\n".join(render_human(payload))
    print(text)
    if args.output:
        Path(args.output).write_text(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
