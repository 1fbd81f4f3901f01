"""Command-line front end.

Commands: check, witness, analyze, verify, reproduce. Decisions travel
through exit codes (0 holds / suite clean, 1 fails, 2 error, 3
inconclusive); human-readable text goes to stderr and machine-readable
JSON to stdout when --json is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .errors import OrthomatError
from .linalg import Matrix, Tolerances
from .norms import NormDescriptor, NormedElement, NormKind
from .ortho import (
    Decision,
    bj_check,
    iso_check,
    r_orth_check,
    roberts_check,
    si_check,
)
from .hilbert import bj_spectral, disjoint_support
from .verify import (
    SUITE_NAMES,
    SuiteConfig,
    reproduce_examples,
    reproduction_ok,
    run_suite,
)

_EXIT = {Decision.HOLDS: 0, Decision.FAILS: 1, Decision.INCONCLUSIVE: 3}

RELATIONS = ("bj", "iso", "roberts", "si", "r", "disjoint-support")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj))


def _tolerances(args) -> Tolerances:
    if getattr(args, "tol", None) is not None:
        return Tolerances(eq_tol=args.tol)
    return Tolerances()


def _load_element(path: str, args) -> NormedElement:
    with open(path) as fh:
        obj = json.load(fh)
    override = None
    if getattr(args, "norm", None) is not None:
        kind = NormKind(args.norm)
        p = getattr(args, "p", None)
        override = NormDescriptor(kind, p)
    element = serialize.element_from_obj(obj, default_norm=None)
    if override is not None:
        element = NormedElement(element.value, override)
    return element


def _load_matrix(path: str) -> Matrix:
    with open(path) as fh:
        return serialize.matrix_from_obj(json.load(fh))


def cmd_check(args) -> int:
    tol = _tolerances(args)
    if args.relation == "disjoint-support":
        a = _load_matrix(args.left)
        b = _load_matrix(args.right)
        ok = disjoint_support(a, b, tol)
        _emit(
            {"relation": "disjoint-support", "decision": "holds" if ok else "fails"},
            args.json,
        )
        _say(f"disjoint support: {'holds' if ok else 'fails'}")
        return 0 if ok else 1
    x = _load_element(args.left, args)
    y = _load_element(args.right, args)
    if args.relation == "bj":
        rpt = bj_check(x, y, tol)
    elif args.relation == "iso":
        rpt = iso_check(x, y, tol)
    elif args.relation == "roberts":
        rpt = roberts_check(x, y, tol)
    elif args.relation == "si":
        rpt = si_check(x, y, tol, depth=args.depth)
    else:
        rpt = r_orth_check(x, y, tol)
    _emit(rpt.to_dict(), args.json)
    _say(f"{rpt.relation.value}: {rpt.decision.value} (margin {rpt.margin:.3e})")
    return _EXIT[rpt.decision]


def cmd_witness(args) -> int:
    tol = _tolerances(args)
    t = _load_matrix(args.left)
    a = _load_matrix(args.right)
    rpt, witness = bj_spectral(t, a, tol)
    if rpt.decision is Decision.FAILS:
        _emit(rpt.to_dict(), args.json)
        _say(f"not BJ-orthogonal (margin {rpt.margin:.3e}); no witness exists")
        return 1
    if witness is None:
        _emit(rpt.to_dict(), args.json)
        _say("BJ holds within the band but no witness met the residual bounds")
        return 3
    obj = rpt.to_dict()
    obj["attainment_residual"] = witness.attainment_residual
    obj["pairing_residual"] = witness.pairing_residual
    _emit(obj, args.json)
    _say(
        "witness found: attainment residual "
        f"{witness.attainment_residual:.3e}, pairing {witness.pairing_residual:.3e}"
    )
    return 0


def cmd_analyze(args) -> int:
    tol = _tolerances(args)
    x = _load_element(args.left, args)
    y = _load_element(args.right, args)
    real = x.value.field.value == "real" and y.value.field.value == "real"
    out: dict = {
        "bj": bj_check(x, y, tol).to_dict(),
        "iso": iso_check(x, y, tol).to_dict(),
        "roberts": roberts_check(x, y, tol).to_dict(),
    }
    if real:
        out["r"] = r_orth_check(x, y, tol).to_dict()
        out["si"] = si_check(x, y, tol, depth=args.depth).to_dict()
    if x.value.is_square and x.value.rows == y.value.rows:
        out["disjoint_support"] = disjoint_support(x.value, y.value, tol)
        if not x.value.is_zero:
            spectral, _ = bj_spectral(x.value, y.value, tol)
            out["bj_spectral"] = spectral.to_dict()
    _emit(out, args.json)
    for name, rpt in out.items():
        verdict = rpt["decision"] if isinstance(rpt, dict) else rpt
        _say(f"{name}: {verdict}")
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        trials=args.trials,
        dims=tuple(int(d) for d in args.dims.split(",")),
        field=args.field,
        seed=args.seed,
        tolerances=_tolerances(args),
    )
    result = run_suite(cfg)
    if args.json:
        print(result.to_json())
    _say(
        f"suite {result.suite}: {result.passed} passed, {result.failed} failed, "
        f"{result.inconclusive} inconclusive out of {result.trials}"
    )
    return 0 if result.failed == 0 else 1


def cmd_reproduce(args) -> int:
    rows = reproduce_examples(_tolerances(args))
    ok = reproduction_ok(rows)
    if args.json:
        print(serialize.dumps(rows))
    for r in rows:
        _say(
            f"[{'ok' if r['ok'] else 'FAIL'}] {r['example']} / {r['quantity']}: "
            f"expected {r['expected']}, computed {r['computed']}"
        )
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthomat",
        description="Orthogonality relations of matrices under several norms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_depth=True):
        p.add_argument("--tol", type=float, default=None, help="equality tolerance")
        p.add_argument("--seed", type=int, default=0, help="seed for seeded operations")
        if with_depth:
            p.add_argument("--depth", type=int, default=40, help="dyadic depth for SI")
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")

    pc = sub.add_parser("check", help="decide one orthogonality relation")
    pc.add_argument("--relation", required=True, choices=RELATIONS)
    pc.add_argument("left")
    pc.add_argument("right")
    pc.add_argument("--norm", choices=[k.value for k in NormKind], default=None)
    pc.add_argument("--p", type=float, default=None, help="norm exponent")
    common(pc)
    pc.set_defaults(func=cmd_check)

    pw = sub.add_parser("witness", help="extract a BJ attainment witness")
    pw.add_argument("left")
    pw.add_argument("right")
    common(pw, with_depth=False)
    pw.set_defaults(func=cmd_witness)

    pa = sub.add_parser("analyze", help="run every applicable relation on a pair")
    pa.add_argument("left")
    pa.add_argument("right")
    pa.add_argument("--norm", choices=[k.value for k in NormKind], default=None)
    pa.add_argument("--p", type=float, default=None)
    common(pa)
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run a randomized theorem suite")
    pv.add_argument("--suite", required=True)
    pv.add_argument("--trials", type=int, default=100)
    pv.add_argument("--dims", default="2,3,4,5,6")
    pv.add_argument("--field", choices=["real", "complex", "both"], default="both")
    common(pv, with_depth=False)
    pv.set_defaults(func=cmd_verify)

    pr = sub.add_parser("reproduce", help="recompute the worked examples")
    common(pr, with_depth=False)
    pr.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OrthomatError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
