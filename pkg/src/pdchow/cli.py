"""Command-line entry point.

Exit status: 0 on success, 1 on a mathematical failure (for example a
Kolchin polynomial without the Chow-form shape), 2 on input errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from .chowform import (ChowFormConsistencyError, NoChowFormError, compute_chow_form, degree_bounds,
                       delta_degree, verification_ranking, verify_charset_representation)
from .jetspace import IncoherentCharset
from .kolchin import charset_summary, chow_admissible_shape, differential_invariants, kolchin_from_charset
from .quasigeneric import QuasiGenericSpec, run_intersection_experiment, validate_support
from .ranking import AutoreducedSet, Ranking, charset_criterion, coherence_check, is_reduced, ritt_reduce
from .report import Report, numpoly_json, poly_json, rational
from .textio import ParseError, format_var, parse_system, print_poly

COMMANDS = ("kolchin", "chowform", "reduce", "coherence", "homogeneity", "intersect", "bounds")


class InputError(Exception):
    pass


class MathFailure(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pdchow", description="Partial differential Chow forms.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help="system file ('-' for stdin)")
    p.add_argument("--t-max", type=int, default=None, help="truncation order for experiments")
    p.add_argument("--ranking", choices=("orderly", "elim"), default=None)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--params", type=int, nargs=5, metavar=("N", "D", "S", "R", "M"),
                   help="bounds only: evaluate without a system file")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _charset(sf, kind: str) -> AutoreducedSet:
    try:
        return AutoreducedSet(sf.charset, Ranking(sf.ctx, kind))
    except ValueError as exc:
        raise InputError(f"charset: {exc}") from None


def _need_orderly(kind: str, command: str):
    if kind != "orderly":
        raise InputError(f"{command} needs an orderly characteristic set")


# commands -------------------------------------------------------------------

def cmd_kolchin(sf, A, args, rep, out):
    w = kolchin_from_charset(charset_summary(A))
    shape = chow_admissible_shape(w, sf.ctx.n)
    inv = differential_invariants(w)
    t_max = args.t_max if args.t_max is not None else sf.options.get("t_max", 5)
    rep.results = {
        "kolchin": numpoly_json(w),
        "power_coeffs": [rational(c) for c in w.power_coeffs()],
        "shape": None if shape is None else {"d": shape[0], "s": shape[1]},
        "invariants": {"dimension": rational(inv["dimension"]), "type": inv["type"],
                       "typical_dimension": rational(inv["typical_dimension"])},
        "values": [rational(w(t)) for t in range(t_max + 1)],
    }
    out.append(f"kolchin polynomial: {w}")
    out.append("power basis: " + ", ".join(rational(c) for c in w.power_coeffs()))
    out.append("chow shape: " + ("absent" if shape is None else f"d = {shape[0]}, s = {shape[1]}"))


def cmd_chowform(sf, A, args, rep, out):
    try:
        res = compute_chow_form(A)
    except (NoChowFormError, IncoherentCharset, ChowFormConsistencyError) as exc:
        raise MathFailure(str(exc)) from None
    rk = verification_ranking(res.F.ctx)
    mem = verify_charset_representation(res, A)
    bounds = degree_bounds(sf.ctx.n, res.d, res.s, res.r, sf.ctx.m)
    rep.results = {
        "F": poly_json(res.F, rk),
        "s": res.s, "d": res.d, "r": res.r,
        "leader": format_var(res.F.ctx, res.leader), "g": res.g,
        "hyperplanes": [print_poly(h.poly) for h in res.hyperplanes],
        "homogeneous": True,
        "membership": {str(j): ok for j, ok in mem.members.items()},
        "bounds": {"lower": rational(bounds.lower), "upper": str(bounds.upper)},
        "leader_structure": res.leader_structure,
        "coordinate_count": len(res.coordinates),
    }
    out.append(f"F = {print_poly(res.F, rk)}")
    out.append(f"s = {res.s}, d = {res.d}, r = {res.r}")
    out.append(f"leader {format_var(res.F.ctx, res.leader)} of degree {res.g}")
    for j, ok in mem.members.items():
        out.append(f"S_F*y{j} - dF/d(theta u0_{j}) in joint ideal: {'yes' if ok else 'NO'}")
    out.append(f"degree bounds for B_s(V): {bounds.lower} .. {bounds.upper}")
    if not mem:
        raise MathFailure("characteristic-set membership check failed")


def cmd_reduce(sf, A, args, rep, out):
    if not sf.polys:
        raise InputError("reduce needs a 'polys:' section")
    items = []
    for f in sf.polys:
        res = ritt_reduce(f, A)
        ok = res.verify(f, A)
        red = all(is_reduced(res.remainder, a, A.ranking) for a in A)
        items.append({"input": print_poly(f), "remainder": poly_json(res.remainder),
                      "exponents": [list(e) for e in res.exponents], "verified": ok, "reduced": red})
        out.append(f"{print_poly(f)}  ->  {print_poly(res.remainder)}")
    rep.results = {"reductions": items}
    if not all(x["verified"] and x["reduced"] for x in items):
        raise MathFailure("reduction certificate failed to verify")


def cmd_coherence(sf, A, args, rep, out):
    coh = coherence_check(A)
    crit = charset_criterion(A)
    rep.results = {"coherent": coh.coherent, "pair": list(coh.pair) if coh.pair else None,
                   "remainder": None if coh.remainder is None else print_poly(coh.remainder),
                   "prime": crit.prime, "criterion": crit.message}
    out.append("coherent" if coh else f"not coherent: pair {coh.pair}, remainder {print_poly(coh.remainder)}")
    out.append(crit.message)
    if not coh:
        raise MathFailure("characteristic set is not coherent")


_BLOCK = re.compile(r"u([0-9]+)_[0-9]+$")


def _blocks(ctx) -> dict:
    found = {}
    for k, nm in enumerate(ctx.names):
        mt = _BLOCK.match(nm)
        if mt:
            found.setdefault(int(mt.group(1)), []).append(k)
    return found or {0: list(range(ctx.n))}


def cmd_homogeneity(sf, A, args, rep, out):
    if not sf.polys:
        raise InputError("homogeneity needs a 'polys:' section")
    blocks = _blocks(sf.ctx)
    items, all_ok = [], True
    for f in sf.polys:
        if f.is_zero():
            raise InputError("homogeneity of the zero polynomial is undefined")
        entries = []
        for b, idx in sorted(blocks.items()):
            r = delta_degree(f, b, idx)
            all_ok &= r.homogeneous
            entries.append({"block": b, "r": r.r, "message": r.message})
            out.append(f"{print_poly(f)}: block {b}: " + (f"degree {r.r}" if r else r.message))
        items.append({"poly": print_poly(f), "blocks": entries})
    rep.results = {"polys": items}
    if not all_ok:
        raise MathFailure("not differentially homogeneous")


def cmd_intersect(sf, A, args, rep, out):
    if sf.order is None:
        raise InputError("intersect needs an 'order:' header")
    s = sf.order
    spec = QuasiGenericSpec(sf.ctx, s, sf.support) if sf.support else QuasiGenericSpec.generic(sf.ctx, s)
    check = validate_support(spec)
    t_max = args.t_max if args.t_max is not None else sf.options.get("t_max", s + 2)
    if t_max < s:
        raise InputError(f"t-max {t_max} is below the order {s}")
    if not check:
        rep.results = {"order": s, "support": [], "valid": False, "generic": False, "measured": [],
                       "predicted": [], "baseline": [], "empty": False, "agrees": False}
        raise MathFailure("invalid support: " + "; ".join(check.messages))
    try:
        exp = run_intersection_experiment(A, spec, t_max)
    except IncoherentCharset as exc:
        raise MathFailure(str(exc)) from None
    from .diffpoly import DiffPoly

    rep.results = {
        "order": s,
        "support": [print_poly(DiffPoly.monomial(sf.ctx, mono)) for mono in spec.support],
        "valid": True, "generic": check.generic,
        "measured": exp.measured, "predicted": [rational(x) for x in exp.predicted],
        "baseline": exp.baseline, "empty": exp.empty, "agrees": exp.agrees,
    }
    for t in range(t_max + 1):
        got = "empty" if exp.measured[t] is None else exp.measured[t]
        out.append(f"t = {t}: measured {got}, predicted {exp.predicted[t]}, B_t(V) {exp.baseline[t]}")
    out.append("agrees with prediction" if exp.agrees else f"MISMATCH at {exp.mismatches()}")
    if not exp.agrees:
        raise MathFailure("measured dimensions disagree with the prediction")


def cmd_bounds(sf, A, args, rep, out):
    if args.params:
        n, d, s, r, m = args.params
    else:
        try:
            res = compute_chow_form(A)
        except (NoChowFormError, IncoherentCharset, ChowFormConsistencyError) as exc:
            raise MathFailure(str(exc)) from None
        n, d, s, r, m = sf.ctx.n, res.d, res.s, res.r, sf.ctx.m
    try:
        b = degree_bounds(n, d, s, r, m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep.results = {"n": n, "d": d, "s": s, "r": r, "m": m,
                   "bounds": {"lower": rational(b.lower), "upper": str(b.upper)}}
    out.append(f"n = {n}, d = {d}, s = {s}, r = {r}, m = {m}")
    out.append(f"{b.lower} <= deg B_s(V) <= {b.upper}")


HANDLERS = {"kolchin": cmd_kolchin, "chowform": cmd_chowform, "reduce": cmd_reduce,
            "coherence": cmd_coherence, "homogeneity": cmd_homogeneity, "intersect": cmd_intersect,
            "bounds": cmd_bounds}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    source = ""
    sf = A = None
    try:
        if args.file is None:
            if not (args.command == "bounds" and args.params):
                raise InputError("a system file is required")
        else:
            source = _read(args.file)
            sf = parse_system(source)
            kind = args.ranking or sf.ranking
            kind = "elimination" if kind == "elim" else kind
            if args.command in ("kolchin", "chowform", "intersect") or (
                    args.command == "bounds" and not args.params):
                _need_orderly(kind, args.command)
            A = _charset(sf, kind)
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    rep = Report(args.command, source)
    out: list = []
    code = 0
    try:
        HANDLERS[args.command](sf, A, args, rep, out)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except MathFailure as exc:
        rep.status, rep.message = "failure", str(exc)
        code = 1
    if args.json:
        stdout.write(rep.to_json())
    else:
        for line in out:
            print(line, file=stdout)
    if code:
        print(f"failure: {rep.message}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())
