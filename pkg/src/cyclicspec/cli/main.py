"""``cyclicspec`` command line.

Exit codes: 0 every check passed, 1 a check failed, 2 usage or input error,
3 input outside the supported regime (singular or reducible curve, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from ..correspondence import forward_spectral_data, reverse_construct, round_trip
from ..errors import CycspecError, PreconditionError, UnsupportedRegime
from ..higgs import (common_component_check, from_spectral_module, to_spectral_module,
                     verify_equivariance, verify_loop_relation, verify_support)
from ..polyalg.fields import parse_field
from ..reduction import fiber_at, simplicity_check
from ..serialize import (SchemaError, dumps, higgs_from_json, higgs_to_json, loads, poly_to_json,
                         spectral_data_from_json, spectral_data_to_json)
from .instances import InstanceSpec, random_instance
from .suites import (SUITES, Report, center_checks, clifford_checks, fiber_checks, reduce_checks,
                     run_suite)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_REGIME = 0, 1, 2, 3


class UsageError(CycspecError):
    pass


def _dims(text: str) -> tuple:
    try:
        dims = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma separated integers, got {text!r}") from None
    if not dims or any(p < 1 for p in dims):
        raise argparse.ArgumentTypeError("dims must be positive")
    return dims


def _point(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected x0,t0")
    return tuple(p.strip() for p in parts)


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(top: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without defaults, so that a flag
        # given before the subcommand is not reset by the subparser
        d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--field", default=d("Fp"), help="Q, Fp (= F_10007), F7, GF(7), ... (default Fp)")
        g.add_argument("--seed", type=int, default=d(0))
        g.add_argument("--out", default=d(None), help="write the main output here instead of stdout")
        g.add_argument("--json", action="store_true", default=d(False), help="print the JSON report on stdout")
        g.add_argument("--timing", action="store_true", default=d(False),
                       help="include wall-clock seconds in reports")
        return g

    common = globals_parser(False)
    ap = argparse.ArgumentParser(prog="cyclicspec", parents=[globals_parser(True)],
                                 description="Spectral correspondence for cyclic Higgs data on an affine chart.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("center", parents=[common], help="truncated center of the path algebra")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    p = sub.add_parser("reduce", parents=[common], help="central reduction: rank, associativity, fibers")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--at", type=_point, help="export the fiber table at x0,t0")

    p = sub.add_parser("fiber", parents=[common], help="simplicity and matrix isomorphisms of fibers")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t0", action="append", help="fiber point (repeatable); default: scan")
    p.add_argument("--x0", default="0")

    p = sub.add_parser("spectral", parents=[common], help="spectral curves and the quiver-module dictionary")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--report")

    p = sub.add_parser("correspond", parents=[common], help="spectral data <-> Higgs data")
    p.add_argument("action", choices=("forward", "reverse", "roundtrip"))
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--cap", type=int, default=2, help="x-degree cap of the intertwiner ansatz")

    p = sub.add_parser("clifford", parents=[common], help="even Clifford isomorphism for m = 2")
    p.add_argument("action", nargs="?", choices=("check",), default="check")
    p.add_argument("--fiber", action="append", help="fiber point t0 (repeatable)")

    p = sub.add_parser("gen", parents=[common], help="seeded random Higgs data")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dims", type=_dims, required=True)
    p.add_argument("--cap", type=int, default=2)
    p.add_argument("--filter", choices=("smooth",))
    p.add_argument("--retries", type=int, default=200)

    p = sub.add_parser("suite", parents=[common], help="run a named verification battery")
    p.add_argument("name", choices=SUITES)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    return ap


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return loads(text, path)


def _write(args, payload: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _emit_report(args, rep: Report, path: str | None = None) -> int:
    doc = dumps(rep.to_json(args.timing))
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    if args.json:
        sys.stdout.write(doc)
    else:
        print(rep.summary())
    if rep.unsupported:
        return EXIT_REGIME
    return EXIT_PASS if rep.passed else EXIT_FAIL


# ------------------------------------------------------------------ commands

def cmd_center(args, F) -> int:
    rep = Report("center", F, args.seed)
    center_checks(rep, [args.m], args.N)
    return _emit_report(args, rep, args.out)


def cmd_reduce(args, F) -> int:
    if args.at is None:
        rep = Report("reduce", F, args.seed)
        reduce_checks(rep, [args.m])
        return _emit_report(args, rep, args.out)
    x0, t0 = (F.from_str(v) for v in args.at)
    f = fiber_at(args.m, x0, t0, F)
    doc = {"m": args.m, "field": F.to_json(), "x0": F.to_str(x0), "t0": F.to_str(t0),
           "labels": f.labels, "table": f.to_json(), "associative": f.is_associative(),
           "unital": f.is_unital(), "simple": simplicity_check(f)}
    _write(args, dumps(doc))
    return EXIT_PASS if doc["associative"] and doc["unital"] else EXIT_FAIL


def cmd_fiber(args, F) -> int:
    rep = Report("fiber", F, args.seed)
    fiber_checks(rep, args.m, args.t0, F.from_str(args.x0))
    return _emit_report(args, rep, args.out)


def cmd_spectral(args, F) -> int:
    H = higgs_from_json(_read_json(args.inp))
    rep = Report("spectral", H.field, args.seed)
    S = to_spectral_module(H)
    cc = common_component_check(H)
    rep.add("loop relation", verify_loop_relation(S))
    rep.add("equivariance", verify_equivariance(S))
    rep.add("support", all(verify_support(S, i) for i in range(H.m)))
    rep.add("round trip", from_spectral_module(S) == H)
    rep.add("common component", cc.strict or cc.squarefree_equal,
            dict(cc.to_json(poly_to_json), curves=[poly_to_json(c) for c in cc.curves]))
    return _emit_report(args, rep, args.report)


def cmd_correspond(args, F) -> int:
    doc = _read_json(args.inp)
    if args.action == "forward":
        sd = forward_spectral_data(higgs_from_json(doc))
        _write(args, dumps(spectral_data_to_json(sd)))
        return EXIT_PASS
    if args.action == "reverse":
        H = reverse_construct(spectral_data_from_json(doc))
        _write(args, dumps(higgs_to_json(H)))
        return EXIT_PASS
    H = higgs_from_json(doc)
    rt = round_trip(H, cap=args.cap)
    rep = Report("roundtrip", H.field, args.seed)
    rep.add("spectral invariants", rt.spectral_invariants_equal, rt.to_json())
    rep.add("intertwiner", rt.intertwiner_found, {"source": rt.intertwiner_source})
    return _emit_report(args, rep, args.out)


def cmd_clifford(args, F) -> int:
    rep = Report("clifford", F, args.seed)
    fibers = [F.from_str(v) for v in args.fiber] if args.fiber else None
    clifford_checks(rep, fibers)
    code = _emit_report(args, rep, args.out)
    if code == EXIT_FAIL and not args.json:
        first = rep.checks[0].witness.get("first_failure")
        if first:
            sys.stdout.write(json.dumps(first, sort_keys=True) + "\n")
    return code


def cmd_gen(args, F) -> int:
    if len(args.dims) != args.m:
        raise UsageError(f"--dims needs {args.m} entries")
    spec = InstanceSpec(args.m, args.dims, F, args.cap, args.seed, args.filter, args.retries)
    H = random_instance(spec)
    _write(args, dumps(higgs_to_json(H)))
    return EXIT_PASS


def cmd_suite(args, F) -> int:
    rep = run_suite(args.name, F, seed=args.seed, count=args.count, m=args.m, N=args.N)
    return _emit_report(args, rep, args.out)


COMMANDS = {
    "center": cmd_center, "reduce": cmd_reduce, "fiber": cmd_fiber, "spectral": cmd_spectral,
    "correspond": cmd_correspond, "clifford": cmd_clifford, "gen": cmd_gen, "suite": cmd_suite,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_PASS
    try:
        F = parse_field(args.field)
        return COMMANDS[args.cmd](args, F)
    except UnsupportedRegime as e:
        print(f"unsupported regime: {e}", file=sys.stderr)
        return EXIT_REGIME
    except (SchemaError, UsageError, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CycspecError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
