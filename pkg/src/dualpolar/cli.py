"""Command-line interface.

Exit codes: 0 success, 1 check failure, 2 input error, 3 inconclusive.
JSON output is deterministic for fixed inputs, seed and tolerances; text
output is meant for people and may change.
"""
import argparse
import csv
import io as _stdio
import os
import sys
import time

import numpy as np

from . import catalog
from .actions import Tolerances, Verdict, is_polar_action
from .cartan import cartan_from_star, intersections
from .duality import dualize_algebra, dualize_subalgebra
from .errors import DualPolarError, InputError, NotThetaStable
from .io import dumps, load_algebra, load_json, load_subspace, write_text
from .liealg import Subspace, is_reductive_algebraic, is_semisimple, is_subalgebra
from .suite import run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class RunConfig:
    """Seed, tolerances and output settings shared by every subcommand."""

    def __init__(self, seed=0, tolerances=None, output_format="json", out=None):
        if not 0 <= seed < 2**64:
            raise InputError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self.tolerances = tolerances or Tolerances()
        self.output_format = output_format
        self.out = out

    @classmethod
    def from_args(cls, args):
        try:
            tols = Tolerances(rank=args.tol_rank, close=args.tol_close, orth=args.tol_orth,
                              refute=args.tol_refute, span=args.tol_span)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return cls(args.seed, tols, args.format, args.out)

    def to_json(self):
        return {"seed": self.seed, "tolerances": self.tolerances.as_dict(), "format": self.output_format}


def _emit(config, payload, text_lines=None, rows=None):
    """Write ``payload`` (json), ``rows`` (csv) or ``text_lines`` (text)."""
    fmt = config.output_format
    if fmt == "csv" and rows is not None:
        buf = _stdio.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    elif fmt == "text" and text_lines is not None:
        text = "\n".join(text_lines) + "\n"
    else:
        text = dumps(payload)
    shown = write_text(text, config.out)
    if shown is not None:
        sys.stdout.write(shown)


def _resolve_algebra(spec):
    """An algebra JSON path or a catalog algebra name such as ``so(1,3)``."""
    if os.path.exists(spec):
        return load_algebra(spec), None
    try:
        return catalog.algebra_by_key(spec)
    except DualPolarError:
        raise InputError(f"{spec!r} is neither a readable file nor a known algebra") from None


def _decomposition(alg, dec):
    if dec is not None:
        return dec
    try:
        return cartan_from_star(alg)
    except DualPolarError:
        return None


def _load_sub(path, alg):
    return Subspace.full(alg) if path is None else load_subspace(path, alg)


def cmd_check(args, config):
    alg, dec = _resolve_algebra(args.algebra)
    sub = _load_sub(args.sub, alg)
    dec = _decomposition(alg, dec)
    tols = config.tolerances
    closed = is_subalgebra(sub, tols.close)
    semisimple = is_semisimple(alg, tols.rank)
    report = {"command": "check", "config": config.to_json(), "algebra": alg.name, "dim": alg.dim,
              "subspace_dim": sub.dim, "subalgebra": closed, "semisimple": semisimple}
    if semisimple:
        red = is_reductive_algebraic(sub, tol=tols.rank, tol_close=tols.close, algebraic=not args.not_algebraic)
        report["reductive"] = red.reductive
        report["reductivity"] = red.to_json()
    else:
        report["reductive"] = None
    if dec is not None:
        parts = intersections(sub, dec, tols.rank)
        report["canonical"] = parts.canonical
        report["canonical_defect"] = parts.defect
    else:
        report["canonical"] = None
    flags = [report[k] for k in ("subalgebra", "semisimple", "reductive", "canonical")]
    report["passed"] = all(f is not False for f in flags)
    lines = [f"{alg.name}: subspace of dim {sub.dim}"] + [
        f"  {k:11s} {report[k]}" for k in ("subalgebra", "semisimple", "reductive", "canonical")]
    _emit(config, report, lines)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_dualize(args, config):
    alg, dec = _resolve_algebra(args.algebra)
    sub = _load_sub(args.sub, alg)
    dec = _decomposition(alg, dec)
    if dec is None:
        raise InputError(f"{alg.name} is not closed under X -> -X^H; no Cartan involution available")
    tols = config.tolerances
    pair = dualize_algebra(dec, tols.close, tols.rank)
    try:
        h_star = dualize_subalgebra(pair, sub, tols.close, tols.rank)
    except NotThetaStable as exc:
        _emit(config, {"command": "dualize", "config": config.to_json(), "error": "NotThetaStable",
                       "defect": exc.defect}, [f"not theta-stable: defect {exc.defect}"])
        return EXIT_FAIL
    ev = pair.compact.killing.eigenvalues()
    payload = {
        "command": "dualize",
        "config": config.to_json(),
        "noncompact": alg.to_json(),
        "compact": pair.compact.to_json(),
        "psi": pair.psi_matrix.tolist(),
        "subalgebra": sub.to_json(),
        "dual_subalgebra": h_star.to_json(),
        "certificate": {"killing_max_eigenvalue": float(ev[-1]), "killing_min_eigenvalue": float(ev[0]),
                        "negative_definite": bool(ev[-1] < -tols.rank * abs(ev[0]))},
    }
    lines = [f"{alg.name} -> {pair.compact.name}", f"  h dim {sub.dim} -> h* dim {h_star.dim}",
             f"  Killing eigenvalues of g* in [{ev[0]:.6g}, {ev[-1]:.6g}] (negative definite)"]
    _emit(config, payload, lines)
    return EXIT_OK


def _polar_pair(alg, dec, sub, config, label):
    tols = config.tolerances
    pair = dualize_algebra(dec, tols.close, tols.rank)
    h_star = dualize_subalgebra(pair, sub, tols.close, tols.rank)
    nc = is_polar_action(sub, dec, config.seed, tols, label=label)
    cp = is_polar_action(h_star, pair.compact_decomposition, config.seed, tols, label=label + "*")
    return nc, cp


def cmd_polar(args, config):
    if args.entry is not None:
        entry = catalog.get_entry(args.entry)
        alg, dec, sub, label = entry.algebra, entry.decomposition, entry.subalgebra, entry.key
    elif args.algebra is not None:
        alg, dec = _resolve_algebra(args.algebra)
        sub = _load_sub(args.sub, alg)
        dec = _decomposition(alg, dec)
        if dec is None:
            raise InputError(f"{alg.name} has no Cartan involution of the form X -> -X^H")
        label = alg.name
    else:
        raise InputError("give a catalog entry key or --algebra")
    nc, cp = _polar_pair(alg, dec, sub, config, label)
    agree = nc.polar is cp.polar
    payload = {"command": "polar", "config": config.to_json(), "entry": label,
               "noncompact": nc.to_json(), "compact": cp.to_json(), "agree": agree}
    lines = [label,
             f"  noncompact: {nc.polar.value} (cohomogeneity {nc.cohomogeneity}, hyperpolar {nc.hyperpolar})",
             f"  compact:    {cp.polar.value} (cohomogeneity {cp.cohomogeneity}, hyperpolar {cp.hyperpolar})",
             f"  agree: {agree}"]
    _emit(config, payload, lines)
    if Verdict.INCONCLUSIVE in (nc.polar, cp.polar):
        return EXIT_INCONCLUSIVE
    return EXIT_OK if agree else EXIT_FAIL


def cmd_table_7_1(args, config):
    rows = catalog.example_7_1_table(args.m, args.p, args.q)
    out = [{"r": r.r, "computed_dim": r.computed, "closed_form_dim": r.closed_form, "match": r.match}
           for r in rows]
    payload = {"command": "table7_1", "config": config.to_json(), "m": args.m, "p": args.p, "q": args.q,
               "n": 2 * args.m + 1, "rows": out}
    lines = [f"m={args.m} p={args.p} q={args.q} (n={2 * args.m + 1})"] + [
        f"  r={r['r']}: computed {r['computed_dim']}, closed form {r['closed_form_dim']}"
        f"{'' if r['match'] else '  MISMATCH'}" for r in out]
    _emit(config, payload, lines, rows=out)
    return EXIT_OK if all(r.match for r in rows) else EXIT_FAIL


def cmd_suite(args, config):
    criteria = None if not args.criteria else [int(c) for c in args.criteria.split(",")]
    if criteria and not set(criteria) <= set(range(1, 10)):
        raise InputError("criteria must be numbers between 1 and 9")
    start = time.perf_counter()
    report = run_suite(config.seed, config.tolerances, criteria)
    payload = {"command": "suite", "config": config.to_json(), **report.to_json()}
    rows = [{"criterion": r.number, "name": r.name, "passed": r.passed} for r in report.results]
    lines = [r.line() for r in report.results] + [f"{'PASS' if report.passed else 'FAIL'} overall"]
    _emit(config, payload, lines, rows=rows)
    # runtime is kept out of the JSON so that reports stay byte-identical
    print(f"suite runtime: {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_catalog(args, config):
    if args.action == "list":
        keys = catalog.catalog_keys()
        rows = [{"key": k} for k in keys]
        _emit(config, {"command": "catalog", "keys": keys}, keys, rows=rows)
        return EXIT_OK
    if not args.key:
        raise InputError("catalog export needs an entry key")
    entry = catalog.get_entry(args.key)
    payload = {"algebra": entry.algebra.to_json(), **{k: v for k, v in entry.to_json().items() if k != "algebra"}}
    _emit(config, payload)
    return EXIT_OK


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerances must be positive")
    return value


def build_parser():
    tols = Tolerances()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    common.add_argument("--tol-rank", type=_positive_float, default=tols.rank)
    common.add_argument("--tol-close", type=_positive_float, default=tols.close)
    common.add_argument("--tol-orth", type=_positive_float, default=tols.orth)
    common.add_argument("--tol-refute", type=_positive_float, default=tols.refute)
    common.add_argument("--tol-span", type=_positive_float, default=tols.span)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    parser = argparse.ArgumentParser(prog="dualpolar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="subalgebra / semisimple / reductive / canonical flags")
    p.add_argument("algebra", help="algebra JSON file or catalog algebra name, e.g. 'sl2r' or 'so(1,3)'")
    p.add_argument("sub", nargs="?", help="subspace JSON file (default: the whole algebra)")
    p.add_argument("--not-algebraic", action="store_true",
                   help="withdraw the algebraicity attestation used by the reductivity test")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dualize", parents=[common], help="compact dual g* and h* = psi(h)")
    p.add_argument("algebra")
    p.add_argument("sub", nargs="?")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("polar", parents=[common], help="polarity on both sides of the duality")
    p.add_argument("entry", nargs="?", help="catalog entry key")
    p.add_argument("--algebra", help="algebra JSON file or catalog algebra name")
    p.add_argument("--sub", help="subspace JSON file")
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("table7_1", parents=[common], help="isotropy dimensions on the real Grassmannian")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_table_7_1)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance suite")
    p.add_argument("--criteria", help="comma separated criterion numbers (default all)")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("catalog", parents=[common], help="list or export catalog entries")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("key", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        config = RunConfig.from_args(args)
        return args.func(args, config)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DualPolarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
