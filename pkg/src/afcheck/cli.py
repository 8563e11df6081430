"""Command-line driver.

Subcommands: field, sunit, selmer, frey, check, scan.  Exit codes expose the
three-valued verdict semantics at the shell level: 0 = ran (verdict yes or
data produced), 2 = verdict no, 3 = verdict unknown under bounded search,
1 = error (structured JSON object in json mode).
"""

import argparse
import sys
import time
from dataclasses import dataclass

from .criteria import (check_cor_3_4, check_cor_7_2, check_thm_3_2,
                       check_thm_3_3, check_thm_5_2, check_thm_7_1,
                       check_thm_7_3, scan_ramified_l)
from .errors import AfcheckError
from .frey import (FAMILY_SQUARE, FAMILY_TWO_POWER, FreySpec,
                   concrete_cross_check, conductor_shape, invariants,
                   odd_multiplicative_primes, valuation_profile)
from .numberfield import make_field
from .parsing import ParseError
from .prime_ideals import factor_rational_prime, s_k, splitting_type, u_k, valuation
from .report import build_report, emit_human, emit_json
from .sunits import selmer_group, solve_sunit
from .units import class_data

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO = 2
EXIT_UNKNOWN = 3

_VERDICT_EXIT = {"yes": EXIT_OK, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}

_CHECKS = ("thm-3-2", "thm-3-3", "cor-3-4", "thm-5-2", "thm-7-1", "cor-7-2",
           "thm-7-3", "thm-7-3-1", "thm-7-3-2")


@dataclass
class RunConfig:
    sunit_exponent_bound: int = 8
    unit_height_bound: int = 10 ** 6
    class_enum_bound: int = 100
    l_max: int = 1000
    max_candidates: int = 500_000
    user_class_number: int = None
    allow_trivial_ideal: bool = False
    seed: int = 0
    output: str = "human"

    def to_dict(self):
        return {k: v for k, v in vars(self).items()}


_CONFIG_KEYS = ("sunit_exponent_bound", "unit_height_bound",
                "class_enum_bound", "l_max", "max_candidates",
                "user_class_number", "allow_trivial_ideal", "seed")


def _load_config_file(path, cfg: RunConfig):
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"bad config line: {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ParseError(f"unknown config key {key!r}")
            try:
                if key == "allow_trivial_ideal":
                    setattr(cfg, key, value.lower() in ("1", "true", "yes"))
                else:
                    setattr(cfg, key, int(value))
            except ValueError as exc:
                raise ParseError(f"bad value for {key}: {value!r}") from exc


def _parser():
    top = argparse.ArgumentParser(
        prog="afcheck",
        description="Exact checker for asymptotic Fermat criteria over "
                    "number fields")
    top.add_argument("--output", choices=("human", "json"), default="human")
    top.add_argument("--seed", type=int, default=0,
                     help="echoed into reports; all computations are deterministic")
    top.add_argument("--config", help="key=value overrides for bounds")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="signature, discriminant, S_K and U_K")
    p.add_argument("poly")

    p = sub.add_parser("sunit", help="bounded S_K-unit equation search")
    p.add_argument("poly")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--user-class-number", type=int, default=None)

    p = sub.add_parser("selmer", help="2-Selmer square classes K(S_K, 2)")
    p.add_argument("poly")
    p.add_argument("--user-class-number", type=int, default=None)

    p = sub.add_parser("frey", help="Frey curve invariants and local reports")
    p.add_argument("family", choices=(FAMILY_TWO_POWER, FAMILY_SQUARE))
    p.add_argument("poly")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--p", default="symbolic",
                   help="a concrete prime exponent, or 'symbolic'")
    p.add_argument("--prime", type=int, default=None,
                   help="rational prime at which to emit reduction reports")

    p = sub.add_parser("check", help="evaluate a criterion's hypotheses")
    p.add_argument("theorem", choices=_CHECKS)
    p.add_argument("poly")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--mode", type=int, default=None)
    p.add_argument("--user-class-number", type=int, default=None)

    p = sub.add_parser("scan", help="candidate totally ramified primes l")
    p.add_argument("poly")
    p.add_argument("--l-max", type=int, default=None)
    return top


def _cmd_field(field, args, cfg):
    from .prime_ideals import verified_field_disc
    verified_field_disc(field)
    payload = {"signature": list(field.signature),
               "poly_disc": field.poly_disc,
               "field_disc": field.field_disc}
    for q in (2, 3):
        payload[f"splitting_{q}"] = splitting_type(field, q).to_dict()
    payload["s_k"] = [p.to_dict() for p in s_k(field)]
    payload["u_k"] = [p.to_dict() for p in u_k(field)]
    return payload, [], EXIT_OK


def _cmd_sunit(field, args, cfg):
    bound = args.bound if args.bound is not None else cfg.sunit_exponent_bound
    search = solve_sunit(field, s_k(field), bound,
                         max_candidates=cfg.max_candidates,
                         user_class_number=args.user_class_number
                         or cfg.user_class_number,
                         height_bound=cfg.unit_height_bound)
    caveats = [f"bounded-search:B={bound}"]
    return search.to_dict(), caveats, EXIT_OK


def _cmd_selmer(field, args, cfg):
    group = selmer_group(field, s_k(field), 2,
                         user_class_number=args.user_class_number
                         or cfg.user_class_number,
                         height_bound=cfg.unit_height_bound)
    return group.to_dict(), [], EXIT_OK


def _cmd_frey(field, args, cfg):
    a = field.element_from_str(args.a)
    b = field.element_from_str(args.b)
    c = field.element_from_str(args.c)
    p = None if args.p == "symbolic" else int(args.p)
    r = args.r if args.family == FAMILY_TWO_POWER else None
    spec = FreySpec(args.family, a, b, c, r=r, p=p)
    payload = {"family": args.family, "p": args.p, "r": r}
    caveats = []
    if p is not None:
        inv = invariants(spec)
        payload["invariants"] = {
            "delta": list(inv.delta.coords), "c4": list(inv.c4.coords),
            "j": list(inv.j.coords), "forms_agree": inv.forms_agree}
        payload["cross_check"] = concrete_cross_check(spec)
    else:
        payload["invariants"] = invariants(spec).to_dict()
    if args.prime is not None:
        sym = FreySpec(args.family, a, b, c, r=r, p=None)
        reports = []
        for P in factor_rational_prime(field, args.prime):
            va = 0 if a.is_zero() else max(0, valuation(a, P))
            vb = 0 if b.is_zero() else max(0, valuation(b, P))
            vc = 0 if c.is_zero() else max(0, valuation(c, P))
            reports.append(valuation_profile(sym, P, va, vb, vc).to_dict())
        payload["reduction_reports"] = reports
    try:
        rep = None
        if args.family == FAMILY_TWO_POWER:
            info = class_data(field, enum_bound=cfg.class_enum_bound,
                              user_class_number=cfg.user_class_number,
                              height_bound=cfg.unit_height_bound)
            rep = info.reps_H[0] if info.reps_H else None
        shape = conductor_shape(field, args.family, rep,
                                odd_multiplicative_primes(spec))
        payload["conductor"] = shape.to_dict()
    except AfcheckError as exc:
        caveats.append(f"conductor shape unavailable: {exc}")
    return payload, caveats, EXIT_OK


def _cmd_check(field, args, cfg):
    bound = args.bound if args.bound is not None else cfg.sunit_exponent_bound
    ucn = args.user_class_number or cfg.user_class_number
    solver_kw = {"max_candidates": cfg.max_candidates,
                 "user_class_number": ucn,
                 "height_bound": cfg.unit_height_bound}
    theorem = args.theorem
    if theorem == "thm-7-3":
        if args.mode not in (1, 2):
            raise ParseError("check thm-7-3 needs --mode 1 or --mode 2")
        theorem = f"thm-7-3-{args.mode}"
    if theorem == "thm-3-2":
        verdict = check_thm_3_2(field, bound, **solver_kw)
    elif theorem == "thm-3-3":
        verdict = check_thm_3_3(field, bound, **solver_kw)
    elif theorem == "cor-3-4":
        verdict = check_cor_3_4(field, bound, **solver_kw)
    elif theorem == "thm-5-2":
        verdict = check_thm_5_2(field, bound, user_class_number=ucn,
                                max_candidates=cfg.max_candidates,
                                height_bound=cfg.unit_height_bound)
    elif theorem == "thm-7-1":
        if args.l is None:
            raise ParseError("check thm-7-1 needs --l")
        verdict = check_thm_7_1(field, args.l)
    elif theorem == "cor-7-2":
        verdict = check_cor_7_2(field)
    elif theorem == "thm-7-3-1":
        if args.l is None:
            raise ParseError("check thm-7-3-1 needs --l")
        verdict = check_thm_7_3(field, 1, ell=args.l)
    elif theorem == "thm-7-3-2":
        verdict = check_thm_7_3(field, 2)
    else:  # pragma: no cover
        raise ParseError(f"unhandled theorem {theorem}")
    if args.r is not None and verdict.r is None:
        verdict.r = args.r
    return verdict.to_dict(), list(verdict.caveats), _VERDICT_EXIT[verdict.applies]


def _cmd_scan(field, args, cfg):
    l_max = args.l_max if args.l_max is not None else cfg.l_max
    return {"candidates": scan_ramified_l(field, l_max)}, [], EXIT_OK


_HANDLERS = {"field": _cmd_field, "sunit": _cmd_sunit, "selmer": _cmd_selmer,
             "frey": _cmd_frey, "check": _cmd_check, "scan": _cmd_scan}


def run(argv) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    cfg = RunConfig(output=args.output, seed=args.seed)
    started = time.monotonic()
    try:
        if args.config:
            _load_config_file(args.config, cfg)
        field = make_field(args.poly)
        payload, caveats, code = _HANDLERS[args.command](field, args, cfg)
    except (AfcheckError, ParseError) as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc),
                           **getattr(exc, "payload", {})}}
        if cfg.output == "json":
            sys.stdout.write(emit_json(build_report(None, _echo(args, cfg),
                                                    error, [], None)))
        else:
            sys.stderr.write(f"error ({type(exc).__name__}): {exc}\n")
        return EXIT_ERROR
    report = build_report(field, _echo(args, cfg), payload, caveats,
                          time.monotonic() - started)
    out = emit_json(report) if cfg.output == "json" else emit_human(report)
    sys.stdout.write(out)
    return code


def _echo(args, cfg):
    echo = {"command": args.command, "seed": cfg.seed}
    for key in ("poly", "theorem", "family", "bound", "r", "l", "mode",
                "prime", "a", "b", "c", "l_max", "p"):
        if hasattr(args, key) and getattr(args, key) is not None:
            echo[key] = getattr(args, key)
    return echo


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
