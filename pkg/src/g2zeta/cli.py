"""Command-line interface: ``g2zeta <command> ...``.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import period, rhverify, rootsystem, specialfn, zeta, zeros
from .config import get_config, load_config, using
from .errors import EvalError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_COMPLEX_RE = re.compile(r"(?<![0-9.eE])([+-]?)i")


def parse_complex(text: str) -> complex:
    """Parse 'a+bi', 'a - bi', 'bi', 'a' (spaces allowed, 'j' also accepted)."""
    cleaned = text.replace(" ", "").replace("j", "i")
    if not cleaned:
        raise UsageError("empty complex number")
    cleaned = _COMPLEX_RE.sub(lambda m: f"{m.group(1)}1i", cleaned)
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _complex_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag, "abs": abs(z)}


def _write(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in row])
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(rhverify._clean(obj), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# commands

_SPECIAL = {
    "gamma": specialfn.complex_gamma,
    "zeta": specialfn.complex_zeta,
    "xi": specialfn.xi,
    "chi": specialfn.chi,
}


def _eval_value(name: str, s: complex) -> complex:
    key = name.strip()
    if key.lower() in _SPECIAL:
        return complex(_SPECIAL[key.lower()](s))
    try:
        fid = zeta.FunctionId.parse(key)
    except ValueError:
        raise UsageError(f"unknown function {name!r}") from None
    return complex(zeta.evaluate(fid, s))


def cmd_eval(args) -> int:
    s = parse_complex(args.s)
    value = _eval_value(args.fn, s)
    if args.emit == "text":
        _write(args, f"{value.real!r} {value.imag:+.17g}i\n")
    elif args.emit == "csv":
        _write(args, _csv([(s.real, s.imag, value.real, value.imag)], ["s_re", "s_im", "re", "im"]))
    else:
        _write(args, _dump(_complex_json(value)))
    return EXIT_OK


def cmd_period_build(args) -> int:
    if args.stage == "period":
        expr = period.build_period()
        text = period.format_period(expr)
    elif args.stage == "residue":
        expr = period.residue_along(period.build_period(), args.kind)
        text = str(expr)
    elif args.stage == "unshifted":
        expr = period.unshifted_zeta(args.kind)
        text = str(expr)
    else:
        expr = period.pipeline_zeta(args.kind)
        text = str(expr)
    if args.emit == "text":
        _write(args, text + "\n")
    else:
        _write(args, json.dumps(period.to_json(expr), indent=2) + "\n")
    return EXIT_OK


def cmd_g2_table(args) -> int:
    rs = rootsystem.build_g2()
    if (args.emit or "text") == "json":
        rows = []
        for w in rs.elements:
            x, y = w.act_on_coords()
            rows.append({
                "weyl": w.name,
                "action": [x.as_list()[:2], y.as_list()[:2]],
                "alpha_pairing_minus_1": (rootsystem.pairing_after_action(w, rootsystem.ALPHA) - 1).as_list(),
                "beta_pairing_minus_1": (rootsystem.pairing_after_action(w, rootsystem.BETA) - 1).as_list(),
                "inversions": [[r.m, r.n] for r in sorted(w.inversions, key=lambda r: (r.n, r.m))],
                "word": list(w.word),
            })
        _write(args, json.dumps(rows, indent=2) + "\n")
    else:
        _write(args, rootsystem.format_table(rs) + "\n")
    return EXIT_OK


def cmd_zeta_eval(args) -> int:
    return cmd_eval(args)


def cmd_zeta_check_fe(args) -> int:
    fid = zeta.FunctionId.parse(args.fn)
    seed = get_config().seed if args.seed is None else args.seed
    if fid in (zeta.FunctionId.ZETA_LONG, zeta.FunctionId.ZETA_SHORT):
        ok, measured, tol = rhverify.check_fe_zeta(fid.value, seed, args.samples)
    elif fid in (zeta.FunctionId.Z1, zeta.FunctionId.Z2):
        ok, measured, tol = rhverify.check_fe_z(fid.value, seed, args.samples)
    else:
        raise UsageError("check-fe applies to long, short, Z1 and Z2")
    out = {"function": fid.value, "samples": args.samples, "seed": seed, "pass": ok, **measured, "tolerance": tol}
    if args.emit == "text":
        _write(args, f"{fid.value}: max residual {measured['max_rel_residual']:.3e} ({'pass' if ok else 'fail'})\n")
    else:
        _write(args, _dump(out))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_zeros_count(args) -> int:
    rect = zeros.Rectangle.parse(args.rect)
    res = zeros.winding_count(args.fn, rect)
    out = {
        "function": zeta.FunctionId.parse(args.fn).value,
        "rectangle": [rect.re_min, rect.re_max, rect.im_min, rect.im_max],
        "count": res.count,
        "raw_phase_turns": res.raw_phase_turns,
        "integer_gap": res.integer_gap,
        "edge_min_abs": res.edge_min_abs,
        "dilations": res.dilations,
    }
    if args.emit == "text":
        _write(args, f"{res.count}\n")
    else:
        _write(args, _dump(out))
    return EXIT_OK


def cmd_zeros_scan(args) -> int:
    fid = zeta.FunctionId.parse(args.fn)
    step = get_config().scan_step if args.step is None else args.step
    if args.emit == "csv":
        t, _ = zeros.line_samples(fid, args.t0, args.t1, step)
        if fid is zeta.FunctionId.XI:
            vals = np.asarray(specialfn.xi(0.5 + 1j * t))
        else:
            vals = np.asarray(zeta.eval_Z(fid, 0.5 + 1j * t))
        rows = [(float(a), float(v.real), float(v.imag)) for a, v in zip(t, vals)]
        _write(args, _csv(rows, ["t", "re_part", "im_part"]))
        return EXIT_OK
    brackets = zeros.line_scan(fid, args.t0, args.t1, step)
    recs = [zeros.refine(fid, b) for b in brackets]
    if args.emit == "text":
        _write(args, "".join(f"{r.location.imag:.10f}\n" for r in recs))
    else:
        _write(args, _dump({"function": fid.value, "t0": args.t0, "t1": args.t1, "step": step,
                            "zeros": [r.to_json() for r in recs]}))
    return EXIT_OK


def cmd_zeros_xi_table(args) -> int:
    # --out doubles as the cache: an existing file tall enough is reused as is
    cache = args.out or str(Path(get_config().cache_dir) / "xi_zeros.json")
    table = zeros.xi_zeros_up_to(args.T, cache=cache)
    if args.emit == "text":
        sys.stdout.write("".join(f"{g:.10f}\n" for g in table.ordinates))
    elif not args.out:
        sys.stdout.write(json.dumps(table.to_json(), indent=1) + "\n")
    return EXIT_OK


def cmd_rh_verify(args) -> int:
    cfg = get_config()
    T = cfg.default_T if args.T is None else args.T
    if args.emit == "csv":
        rows = []
        for kind in ("Z1", "Z2"):
            rows += [(kind,) + r for r in rhverify.scan_rows(kind, T)]
        _write(args, _csv(rows, ["function", "t", "re_part", "im_part"]))
        return EXIT_OK
    report = rhverify.full_report(T=T, seed=cfg.seed, jobs=cfg.jobs)
    if args.emit == "text":
        lines = [f"{r.check_id:<18} {r.status}" for r in report.records]
        lines.append(f"{'all':<18} {'pass' if report.all_passed else 'fail'} ({rhverify.EVIDENCE_LABEL})")
        _write(args, "\n".join(lines) + "\n")
    else:
        _write(args, report.dumps(timing=args.timing))
    return EXIT_OK if report.all_passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="INI-style config file (key = value)")
    p.add_argument("--seed", type=int, help="seed for randomised sample points")
    p.add_argument("--jobs", type=int, help="worker threads for independent checks")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--emit", choices=("json", "csv", "text"), help="output format (default depends on the command)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="g2zeta", description="Zeta functions of G2: construction and zero checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a special function or G2 zeta at one point")
    p.add_argument("--fn", required=True, help="gamma, zeta, xi, chi, long, short, Z1, Z2, F1, F2, FT1, FT2")
    p.add_argument("--s", required=True, help='complex argument, e.g. "0.5+14.2i"')
    p.set_defaults(func=cmd_eval)

    per = sub.add_parser("period", help="symbolic period and its residues").add_subparsers(dest="action", required=True)
    p = per.add_parser("build", parents=[common])
    p.add_argument("--kind", choices=("long", "short"), default="long")
    p.add_argument("--stage", choices=("period", "residue", "unshifted", "zeta"), default="zeta")
    p.set_defaults(func=cmd_period_build)

    g2 = sub.add_parser("g2", help="root system tables").add_subparsers(dest="action", required=True)
    p = g2.add_parser("table", parents=[common])
    p.set_defaults(func=cmd_g2_table)

    zt = sub.add_parser("zeta", help="G2 zeta functions").add_subparsers(dest="action", required=True)
    p = zt.add_parser("eval", parents=[common])
    p.add_argument("--fn", required=True)
    p.add_argument("--s", required=True)
    p.set_defaults(func=cmd_zeta_eval)
    p = zt.add_parser("check-fe", parents=[common])
    p.add_argument("--fn", required=True, help="long, short, Z1 or Z2")
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_zeta_check_fe)

    zr = sub.add_parser("zeros", help="zero counting and location").add_subparsers(dest="action", required=True)
    p = zr.add_parser("count", parents=[common])
    p.add_argument("--fn", required=True)
    p.add_argument("--rect", required=True, help="re_min,re_max,im_min,im_max")
    p.set_defaults(func=cmd_zeros_count)
    p = zr.add_parser("scan", parents=[common])
    p.add_argument("--fn", required=True, help="Z1, Z2 or XI")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=60.0)
    p.add_argument("--step", type=float)
    p.set_defaults(func=cmd_zeros_scan)
    p = zr.add_parser("xi-table", parents=[common])
    p.add_argument("--T", type=float, default=130.0)
    p.set_defaults(func=cmd_zeros_xi_table)

    rh = sub.add_parser("rh", help="verification pipeline").add_subparsers(dest="action", required=True)
    p = rh.add_parser("verify", parents=[common])
    p.add_argument("--T", type=float)
    p.add_argument("--timing", action="store_true", help="include per-check runtimes (breaks byte-identical output)")
    p.set_defaults(func=cmd_rh_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = load_config(args.config)
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.jobs is not None:
            overrides["jobs"] = args.jobs
        if overrides:
            cfg = cfg.replace(**overrides)
    except (OSError, ValueError) as exc:
        print(f"g2zeta: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.emit is None and args.func is not cmd_g2_table:
            args.emit = "json"
        with using(cfg):
            return args.func(args)
    except UsageError as exc:
        print(f"g2zeta: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EvalError as exc:
        print(f"g2zeta: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
