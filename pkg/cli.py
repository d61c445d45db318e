# cli.py
"""hvhom command line: exit 0 on success, 1 when a check fails, 2 on usage or domain errors."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from config import settings
from core.algebra import bracket
from core.errors import HVHomError
from services.endo import (
    EndoParams,
    apply_endo,
    audit_lemma28,
    audit_theorem22,
    calibrate_corrections,
    printed_corrections,
)
from services.expr import parse_element, parse_vector
from services.harness.models import SuiteConfig
from services.harness.registry import SUITES, run_suite
from services.harness.report import emit_report
from services.homlie import hom_bracket
from services.homrep import (
    admissibility,
    audit_section3,
    derive_spec,
    hom_act,
    is_weight_module,
    solve_twist_window,
)
from services.intermediate import act, family_from_tag, orbit_window_span

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


# ──────────────────────────────────────────────
# flag groups
# ──────────────────────────────────────────────

def _endo_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("endomorphism")
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--a", default="1")
    g.add_argument("--b", default="1")
    g.add_argument("--c", default="0")
    g.add_argument("--d", default="0")
    g.add_argument("--corrections", choices=("calibrated", "printed"), default="calibrated")
    return p


def _family_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("module family")
    g.add_argument("--family", default="abf", help="abf, af, bf, u, v, ut, vt")
    g.add_argument("--alpha", default="0")
    g.add_argument("--beta", default="0")
    g.add_argument("--F", dest="F", default="0")
    g.add_argument("--norm", default="1")
    g.add_argument("--sign", type=int, choices=(-1, 1), default=-1)
    g.add_argument("--printed-actions", action="store_true",
                   help="use the actions with the printed sign convention (sign +1)")
    g.add_argument("--loose", action="store_true",
                   help="build Hom-module specs without the admissibility check")
    return p


def _run_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run")
    g.add_argument("--window", type=int, default=None)
    g.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    g.add_argument("--max-counterexamples", type=int, default=None)
    g.add_argument("--parallel", action="store_true", default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    endo, family, run = _endo_flags(), _family_flags(), _run_flags()
    parser = argparse.ArgumentParser(prog="hvhom", description="Twisted Heisenberg-Virasoro Hom-type toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="[x, y]")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("hombracket", parents=[endo], help="[x, y]_φ = φ([x, y])")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("endo", help="apply or calibrate φ")
    endo_sub = p.add_subparsers(dest="endo_command", required=True)
    q = endo_sub.add_parser("apply", parents=[endo])
    q.add_argument("x")
    endo_sub.add_parser("calibrate", parents=[endo, run])

    p = sub.add_parser("act", parents=[family], help="ρ(x) v on an intermediate series module")
    p.add_argument("x")
    p.add_argument("v")

    p = sub.add_parser("homact", parents=[endo, family], help="ρ_φ(x) v = φ_V(ρ(x) v)")
    p.add_argument("x")
    p.add_argument("v")

    sub.add_parser("admissible", parents=[endo, family], help="validate a Hom-module spec and print q")
    sub.add_parser("solve-twist", parents=[endo, family, run], help="windowed solve for twist maps")
    sub.add_parser("weight", parents=[endo, family], help="is the Hom module a weight module")

    p = sub.add_parser("orbit", parents=[family, run], help="indices reachable from v_t0")
    p.add_argument("t0", type=int)

    p = sub.add_parser("check", parents=[endo, family, run], help="run an identity suite")
    p.add_argument("suite", help=", ".join(SUITES))

    p = sub.add_parser("audit", parents=[endo, family, run], help="printed versus derived formulas")
    p.add_argument("subject", choices=("thm22", "lemma28", "section3"))
    return parser


# ──────────────────────────────────────────────
# helpers
# ──────────────────────────────────────────────

def _sign(args: argparse.Namespace) -> int:
    return 1 if args.printed_actions else args.sign


def _endo(args: argparse.Namespace):
    p = EndoParams.make(args.k, args.a, args.b, args.c, args.d)
    if args.corrections == "printed":
        return p, printed_corrections(p)
    return p, calibrate_corrections(p, getattr(args, "window", None))


def _family(args: argparse.Namespace):
    return family_from_tag(args.family, args.alpha, args.beta, args.F)


def _spec(args: argparse.Namespace):
    p = EndoParams.make(args.k, args.a, args.b, args.c, args.d)
    return derive_spec(_family(args), p, args.norm, strict=not args.loose)


def _suite_config(args: argparse.Namespace) -> SuiteConfig:
    return SuiteConfig(
        window=args.window,
        max_counterexamples=args.max_counterexamples,
        parallel=args.parallel,
        k=args.k, a=args.a, b=args.b, c=args.c, d=args.d,
        corrections=args.corrections,
        family=args.family, alpha=args.alpha, beta=args.beta, F=args.F,
        sign=_sign(args), norm=args.norm, strict=not args.loose,
    )


def _write_json(args: argparse.Namespace, payload: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))


# ──────────────────────────────────────────────
# commands
# ──────────────────────────────────────────────

def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "bracket":
        print(bracket(parse_element(args.x), parse_element(args.y)))
        return EXIT_OK

    if cmd == "hombracket":
        p, dc = _endo(args)
        print(hom_bracket(p, dc, parse_element(args.x), parse_element(args.y)))
        return EXIT_OK

    if cmd == "endo":
        p, dc = _endo(args)
        if args.endo_command == "apply":
            print(apply_endo(p, dc, parse_element(args.x)))
            return EXIT_OK
        _write_json(args, (json.dumps(dc.as_dict(), sort_keys=True) + "\n").encode("utf-8"))
        return EXIT_OK

    if cmd == "act":
        print(act(_family(args), parse_element(args.x), parse_vector(args.v), _sign(args)))
        return EXIT_OK

    if cmd == "homact":
        print(hom_act(_spec(args), parse_element(args.x), parse_vector(args.v), _sign(args)))
        return EXIT_OK

    if cmd == "admissible":
        p = EndoParams.make(args.k, args.a, args.b, args.c, args.d)
        print(f"q = {admissibility(_family(args), p).q}")
        return EXIT_OK

    if cmd == "solve-twist":
        p = EndoParams.make(args.k, args.a, args.b, args.c, args.d)
        solution = solve_twist_window(_family(args), p, args.window)
        payload = solution.to_payload().model_dump(mode="json")
        _write_json(args, (json.dumps(payload, sort_keys=True) + "\n").encode("utf-8"))
        return EXIT_OK

    if cmd == "weight":
        print("weight module" if is_weight_module(_spec(args)) else "not a weight module")
        return EXIT_OK

    if cmd == "orbit":
        reached = orbit_window_span(_family(args), args.t0, args.window)
        print(" ".join(str(t) for t in sorted(reached)))
        return EXIT_OK

    if cmd == "check":
        report = run_suite(args.suite, _suite_config(args))
        payload = emit_report(report)
        _write_json(args, payload)
        return EXIT_OK if report.passed else EXIT_FAILED

    # audit
    if args.subject == "thm22":
        report = audit_theorem22(EndoParams.make(args.k, args.a, args.b, args.c, args.d), args.window)
    elif args.subject == "lemma28":
        report = audit_lemma28(args.d, args.window)
    else:
        report = audit_section3(_spec(args), args.window)
    _write_json(args, emit_report(report))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    logger.remove()
    logger.add(sys.stderr, level=settings.LOG_LEVEL)

    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK

    try:
        return _dispatch(args)
    except HVHomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
