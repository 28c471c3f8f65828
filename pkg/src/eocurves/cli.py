"""Command-line front end.

Exit codes: 0 all requested checks pass (or value computed), 1 at least
one verification failed, 2 usage errors.  All rationals print as "p/q";
report formats are json, csv, or pretty text.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import catalan as cat
from . import hurwitz as hur
from . import schur
from . import wkb
from .cache import cache_dir, export_caches, import_caches
from .rationals import qstr
from .report import Report, RunConfig, run_suite, SUITES, CheckRecord

Q = Fraction


def _mu_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad profile {text!r}") from exc


def _common_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS if suppress else v)
    parser.add_argument("--format", choices=("json", "csv", "pretty"),
                        default=default("pretty"), help="report output format")
    parser.add_argument("--jobs", type=int, default=default(1),
                        help="parallel workers for verification suites")
    parser.add_argument("--tolerance", type=float, default=default(1e-8),
                        help="relative tolerance for floating probes")
    parser.add_argument("--cache", type=str, default=default(""),
                        help="JSON cache file to load before and save after")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="eo",
        description="Exact computations and verifications for two quantum-curve models")
    top.add_argument("--version", action="version", version=f"eo {__version__}")
    _common_options(top, suppress=False)
    # the same options are accepted after any subcommand
    common = argparse.ArgumentParser(add_help=False)
    _common_options(common, suppress=True)
    sub = top.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalan", help="generalized Catalan model", parents=[common])
    cat_sub = p_cat.add_subparsers(dest="subcommand", required=True)
    p = cat_sub.add_parser("count", help="arrowed cellular-graph count", parents=[common])
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_mu_list, required=True)
    p = cat_sub.add_parser("free-energy", help="exact n-point free energy", parents=[common])
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = cat_sub.add_parser("s-coeff", help="WKB coefficient S_m in t", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--path", choices=("assembled", "recursive", "both"),
                   default="both")
    p.add_argument("--extended", action="store_true",
                   help="allow m >= 5 (pulls in the larger free energies)")
    p = cat_sub.add_parser("verify-schrodinger",
                           help="order-by-order quantum-curve residuals")
    p.add_argument("--max-order", type=int, default=4)

    p_hur = sub.add_parser("hurwitz", help="single Hurwitz model", parents=[common])
    hur_sub = p_hur.add_subparsers(dest="subcommand", required=True)
    p = hur_sub.add_parser("number", help="exact Hurwitz number", parents=[common])
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_mu_list, required=True)
    p = hur_sub.add_parser("free-energy", help="exact n-point free energy", parents=[common])
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = hur_sub.add_parser("s-coeff", help="WKB coefficient S_m (polynomial)", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p = hur_sub.add_parser("verify", help="verification sub-suites", parents=[common])
    p.add_argument("--suite",
                   choices=("recursion", "heat", "zhou", "commutator",
                            "lambert", "all"),
                   default="all")

    p_wkb = sub.add_parser("wkb", help="transport hierarchy on the curve symbol", parents=[common])
    wkb_sub = p_wkb.add_subparsers(dest="subcommand", required=True)
    p = wkb_sub.add_parser("corrections", help="quantization corrections A_k", parents=[common])
    p.add_argument("--model", choices=("catalan", "hurwitz"), required=True)
    p.add_argument("--order", type=int, default=4)
    p = wkb_sub.add_parser("s-prime", help="solve the hierarchy for S_n'", parents=[common])
    p.add_argument("--model", choices=("catalan", "hurwitz"), required=True)
    p.add_argument("--n", type=int, required=True)

    p_schur = sub.add_parser("schur", help="symmetric-function identities", parents=[common])
    schur_sub = p_schur.add_subparsers(dest="subcommand", required=True)
    p = schur_sub.add_parser("verify", help="graded identity checks", parents=[common])
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--s-order", type=int, default=6)
    p = schur_sub.add_parser("character", help="irreducible character value", parents=[common])
    p.add_argument("--mu", type=_mu_list, required=True)
    p.add_argument("--lambda", dest="lam", type=_mu_list, required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite", parents=[common])
    p_verify.add_argument("--suite",
                          choices=("catalan", "hurwitz", "wkb", "schur", "all"),
                          default="all")
    p_verify.add_argument("--max-order", type=int, default=4,
                          help="retained for reproducibility echo")

    p_cache = sub.add_parser("cache", help="persistent memo tables", parents=[common])
    cache_sub = p_cache.add_subparsers(dest="subcommand", required=True)
    p = cache_sub.add_parser("export", parents=[common])
    p.add_argument("--path", type=str, default="")
    p = cache_sub.add_parser("import", parents=[common])
    p.add_argument("--path", type=str, default="")

    return top


def _report_and_exit(report: Report, fmt: str) -> int:
    print(report.render(fmt))
    return 0 if report.overall == "pass" else 1


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        print(data if isinstance(data, str) else json.dumps(data))


HURWITZ_SUBSUITES = {
    "recursion": ["hurwitz-recursion"],
    "heat": ["hurwitz-heat", "hurwitz-s-cross-paths"],
    "zhou": ["hurwitz-zhou"],
    "commutator": ["hurwitz-pq-commutator"],
    "lambert": ["hurwitz-lambert"],
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command,
                    subcommand=getattr(args, "subcommand", "") or "",
                    suite=getattr(args, "suite", "") or "",
                    params={k: v for k, v in sorted(vars(args).items())
                            if k not in {"command", "subcommand", "format",
                                         "jobs", "tolerance", "cache"}
                            and not callable(v)},
                    output_format=args.format,
                    cache_path=args.cache,
                    jobs=args.jobs,
                    tolerance=args.tolerance)

    cache_file = Path(args.cache) if args.cache else None
    if cache_file and cache_file.exists():
        import_caches(cache_file)

    code = _dispatch(args, cfg)

    if cache_file:
        export_caches(cache_file)
    return code


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> int:
    fmt = args.format
    if args.command == "catalan":
        if args.subcommand == "count":
            print(cat.catalan_count(args.g, args.n, args.mu))
            return 0
        if args.subcommand == "free-energy":
            fe = cat.free_energy(args.g, args.n)
            _emit({"g": args.g, "n": args.n, "terms": fe.to_json()}, "json")
            return 0
        if args.subcommand == "s-coeff":
            if args.m >= 5 and not args.extended:
                print("m >= 5 needs --extended (large free energies)",
                      file=sys.stderr)
                return 2
            out = {}
            if args.path in ("assembled", "both"):
                out["assembled"] = cat.s_coefficient_assembled(args.m).to_json()
            if args.path in ("recursive", "both"):
                out["recursive"] = cat.s_coefficient_recursive(args.m).to_json()
            if args.path == "both":
                out["equal"] = (out["assembled"] == out["recursive"])
            _emit(out, "json")
            return 0 if out.get("equal", True) else 1
        if args.subcommand == "verify-schrodinger":
            residuals = cat.schrodinger_residuals(max(args.max_order - 1, 0))
            records = [
                CheckRecord(f"order-{k}", "quantum-curve residual",
                            "pass" if r.is_zero() else "fail",
                            "0" if r.is_zero() else "nonzero", 0.0)
                for k, r in enumerate(residuals)]
            return _report_and_exit(
                Report("catalan-schrodinger", records, cfg), fmt)

    if args.command == "hurwitz":
        if args.subcommand == "number":
            print(qstr(hur.hurwitz_number(args.g, args.n, args.mu)))
            return 0
        if args.subcommand == "free-energy":
            fe = hur.free_energy(args.g, args.n)
            _emit({"g": args.g, "n": args.n, "terms": fe.to_json()}, "json")
            return 0
        if args.subcommand == "s-coeff":
            poly = hur.s_coefficient(args.m)
            _emit({"m": args.m, "coeffs": poly.to_json()}, "json")
            return 0
        if args.subcommand == "verify":
            wanted = (HURWITZ_SUBSUITES.get(args.suite)
                      if args.suite != "all" else None)
            report = run_suite("hurwitz", cfg)
            if wanted is not None:
                report = Report("hurwitz:" + args.suite,
                                [c for c in report.checks if c.check_id in wanted],
                                cfg)
            return _report_and_exit(report, fmt)

    if args.command == "wkb":
        if args.subcommand == "corrections":
            corr = wkb.recover_corrections(args.model, args.order)
            records = [
                CheckRecord(f"A{k + 1}", "quantization correction",
                            "pass" if c.is_zero() else "fail",
                            json.dumps(c.to_json()), 0.0)
                for k, c in enumerate(corr)]
            return _report_and_exit(
                Report(f"wkb-corrections-{args.model}", records, cfg), fmt)
        if args.subcommand == "s-prime":
            f = wkb.s_prime_from_hierarchy(args.model, args.n)
            _emit({"model": args.model, "n": args.n, "s_prime": f.to_json()},
                  "json")
            return 0

    if args.command == "schur":
        if args.subcommand == "character":
            dim, chi = schur.dim_and_character(args.mu, args.lam)
            _emit({"dim": dim, "character": chi}, "json")
            return 0
        if args.subcommand == "verify":
            w, r = args.max_weight, args.s_order
            records = []
            tau = schur.tau_expansion_residual(w, r)
            records.append(CheckRecord(
                "tau-expansion", "character expansion of exp(H)",
                "pass" if tau.is_zero() else "fail",
                f"weight<={w}, order<={r}", 0.0))
            heat = schur.heat_consistency_residual(w, r)
            records.append(CheckRecord(
                "heat-flow", "cut-and-join generates the s-flow",
                "pass" if heat.is_zero() else "fail",
                f"weight<={w}, order<={r - 1}", 0.0))
            cauchy = schur.cauchy_residual(min(w, 5))
            records.append(CheckRecord(
                "cauchy", "pairing identity",
                "pass" if cauchy.is_zero() else "fail",
                f"weight<={min(w, 5)}", 0.0))
            return _report_and_exit(Report("schur-verify", records, cfg), fmt)

    if args.command == "verify":
        return _report_and_exit(run_suite(args.suite, cfg), fmt)

    if args.command == "cache":
        path = Path(args.path) if args.path else cache_dir() / "cache.json"
        if args.subcommand == "export":
            stats = export_caches(path)
            _emit({"path": str(path), **stats}, "json")
            return 0
        if args.subcommand == "import":
            stats = import_caches(path)
            _emit({"path": str(path), **stats}, "json")
            return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
