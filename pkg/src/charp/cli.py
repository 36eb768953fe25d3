"""Command-line front end.

Every subcommand prints a human-readable report, or with --json a single
structured object {command, inputs, result, budget_used, unresolved_reasons}
with stable field names and sorted keys, so identical requests produce
byte-identical output.

Exit codes: 0 success (unresolved states are reported, never hidden),
2 parse error, 3 budget exceeded (partial report), 4 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .assoc import ass_monomial, maximal_in_ass, union_ass_fseq
from .budget import Budget, BudgetExceeded, InternalInvariantError, Unresolved
from .depth import (cdepth_lower_bound, depth_at_origin,
                    kdepth_truncation_profile, regular_sequence_check,
                    sdepth)
from .frobenius import (FSequence, fedder_f_pure, frobenius_closure,
                        frobenius_power, frobenius_preimage,
                        fseq_radical_stabilize, fseq_verify,
                        is_frobenius_closed)
from .groebner import Ideal, colon_ideal, groebner_basis
from .modules import ModulePresentation
from .parse import ParseError, parse_poly, parse_poly_list, parse_ring
from .perfclosure import (PerfectClosureIdeal, extended_ideal_membership,
                          gamma_fseq, parse_root, prime_extension_check)
from .ring import order_from_name
from .verify import SUITE_ALIASES, SUITE_NAMES, run_suite

DEFAULTS = {"e_max": 4, "window": 2, "lift_cap": 6, "budget": 10 ** 6,
            "seed": 0}


def _basis_list(ideal, budget):
    gb = ideal.groebner_basis(budget)
    return [str(g) for g in gb] if gb else ["0"]


def _ideal_arg(ns, ring, attr="ideal"):
    return Ideal.parse(ring, getattr(ns, attr))


def _module_arg(ns, ring):
    if getattr(ns, "matrix", None):
        text = ns.matrix.strip()
        if text.startswith("["):
            text = text[1:]
        if text.endswith("]"):
            text = text[:-1]
        rows = [row for row in text.split(";") if row.strip()]
        entries = [[parse_poly(cell, ring.free()) for cell in row.split(",")]
                   for row in rows]
        width = {len(r) for r in entries}
        if len(width) != 1:
            raise ParseError("ragged matrix", ns.matrix, 0)
        cols = [tuple(entries[i][j] for i in range(len(entries)))
                for j in range(len(entries[0]))]
        return ModulePresentation(ring, len(entries), cols)
    if getattr(ns, "ideal", None):
        return ModulePresentation.cyclic(ring, _ideal_arg(ns, ring).gens)
    raise ParseError("need --ideal or --matrix", "", 0)


def _fseq_arg(ns, ring, budget):
    family = ns.family
    if family == "list":
        if not ns.terms:
            raise ParseError("--family list needs --terms", "", 0)
        terms = [Ideal(ring, parse_poly_list(t.strip(), ring.free()))
                 for t in ns.terms.split(";") if t.strip()]
        return FSequence.explicit(ring, terms)
    I = _ideal_arg(ns, ring)
    if family == "bracket":
        return FSequence.bracket_chain(I, ns.levels)
    if family == "constant":
        return FSequence.constant_chain(I, ns.levels)
    raise ParseError(f"unknown family {family}", family, 0)


# ---------------------------------------------------------------------------
# handlers: each returns (result dict, human lines, unresolved reasons)

def _cmd_gb(ns, budget):
    ring = parse_ring(ns.ring)
    I = _ideal_arg(ns, ring)
    if ns.order:
        basis = groebner_basis(I, order_from_name(ns.order), budget)
        out = [str(g) for g in basis] if basis else ["0"]
    else:
        out = _basis_list(I, budget)
    return {"basis": out}, ["basis: (" + ", ".join(out) + ")"], []


def _cmd_colon(ns, budget):
    ring = parse_ring(ns.ring)
    C = colon_ideal(_ideal_arg(ns, ring), Ideal.parse(ring, ns.by), budget)
    out = _basis_list(C, budget)
    return {"basis": out}, ["colon: (" + ", ".join(out) + ")"], []


def _cmd_frobpow(ns, budget):
    ring = parse_ring(ns.ring)
    P = frobenius_power(_ideal_arg(ns, ring), ns.e)
    gens = [str(g) for g in P.gens] or ["0"]
    return ({"generators": gens, "basis": _basis_list(P, budget)},
            ["bracket power: (" + ", ".join(gens) + ")"], [])


def _cmd_frobpre(ns, budget):
    ring = parse_ring(ns.ring)
    P = frobenius_preimage(_ideal_arg(ns, ring), ns.e, budget)
    out = _basis_list(P, budget)
    return {"basis": out}, ["preimage: (" + ", ".join(out) + ")"], []


def _cmd_closure(ns, budget):
    ring = parse_ring(ns.ring)
    res = frobenius_closure(_ideal_arg(ns, ring), ns.emax, budget)
    out = _basis_list(res.closure, budget)
    stab = res.stabilized_at if res.stabilized_at is not None else "unresolved"
    lines = [f"closure: (" + ", ".join(out) + ")",
             f"stabilized_at: {stab} (heuristic: {res.heuristic})"]
    unresolved = ([f"closure chain still ascending at e_max={ns.emax}"]
                  if res.unresolved else [])
    return ({"closure": out, "stabilized_at": stab,
             "chain": [_basis_list(c, budget) for c in res.chain]},
            lines, unresolved)


def _cmd_closed(ns, budget):
    ring = parse_ring(ns.ring)
    ans = is_frobenius_closed(_ideal_arg(ns, ring), ns.emax, budget)
    val = "unresolved" if ans is None else ans
    unresolved = ["closedness undecided within e_max"] if ans is None else []
    return {"closed": val}, [f"frobenius closed: {val}"], unresolved


def _cmd_fedder(ns, budget):
    ring = parse_ring(ns.ring)
    m = Ideal.parse(ring.free(), ns.max_ideal) if ns.max_ideal else None
    rep = fedder_f_pure(ring, m, budget)
    lines = [("F-pure" if rep.is_f_pure else "not F-pure") + f" (tested at q = {rep.q})"]
    if rep.witness is not None:
        lines.append(f"witness: {rep.witness}")
    return ({"f_pure": rep.is_f_pure,
             "witness": str(rep.witness) if rep.witness is not None else None,
             "q": rep.q, "colon": _basis_list(rep.colon, budget)}, lines, [])


def _cmd_fseq_verify(ns, budget):
    ring = parse_ring(ns.ring)
    seq = _fseq_arg(ns, ring, budget)
    ok, idx = fseq_verify(seq, budget)
    lines = ["f-sequence: verified" if ok else f"f-sequence: FAILS at index {idx}"]
    return {"ok": ok, "first_failing_index": idx}, lines, []


def _cmd_fseq_radical(ns, budget):
    ring = parse_ring(ns.ring)
    seq = _fseq_arg(ns, ring, budget)
    try:
        rad = fseq_radical_stabilize(seq, ns.emax, budget)
    except Unresolved as exc:
        partial = (_basis_list(exc.partial, budget)
                   if exc.partial is not None else None)
        return ({"radical": "unresolved", "partial": partial},
                ["radical: unresolved"], [str(exc)])
    out = _basis_list(rad, budget)
    return {"radical": out}, ["radical: (" + ", ".join(out) + ")"], []


def _cmd_ass(ns, budget):
    ring = parse_ring(ns.ring)
    I = _ideal_arg(ns, ring)
    if ns.point:
        point = tuple(int(c) for c in ns.point.split(","))
        ans = maximal_in_ass(I, point, budget)
        return ({"maximal_associated": ans},
                [f"maximal ideal at {point} associated: {ans}"], [])
    recs = ass_monomial(I, budget)
    out = [{"prime": list(r.variables), "witness": str(r.witness)}
           for r in recs]
    lines = ["Ass: " + ", ".join(
        "(" + (", ".join(r.variables) or "0") + ")" for r in recs)]
    return {"primes": out}, lines, []


def _cmd_ass_union(ns, budget):
    ring = parse_ring(ns.ring)
    seq = _fseq_arg(ns, ring, budget)
    recs = union_ass_fseq(seq, budget)
    out = [{"prime": list(r.variables), "kind": r.kind, "side": r.side,
            "first_seen": r.first_seen} for r in recs]
    lines = [f"{str(r)} first_seen={r.first_seen}" for r in recs]
    return {"records": out}, lines, []


def _cmd_depth(ns, budget):
    ring = parse_ring(ns.ring)
    M = _module_arg(ns, ring)
    d = depth_at_origin(M, cross_check=not ns.no_cross_check, budget=budget)
    return {"depth": d}, [f"depth at origin: {d}"], []


def _cmd_sdepth(ns, budget):
    ring = parse_ring(ns.ring)
    M = _module_arg(ns, ring)
    rep = sdepth(M, ns.emax, ns.window, budget=budget)
    val = rep.stabilized_value if rep.stabilized_value is not None else "unresolved"
    lines = [f"per-e depth: {[d for _, d in rep.per_e_depth]}",
             f"sdepth: {val} (window={rep.window})"]
    unresolved = ["sdepth window not reached"] if rep.unresolved else []
    return ({"per_e_depth": [[e, d] for e, d in rep.per_e_depth],
             "sdepth": val, "window": rep.window, "f_pure": rep.f_pure},
            lines, unresolved)


def _cmd_reg_check(ns, budget):
    ring = parse_ring(ns.ring)
    M = _module_arg(ns, ring)
    xs = parse_poly_list(ns.elements, ring.free())
    flags = regular_sequence_check(xs, M, range(ns.emax + 1), budget)
    return ({"per_e_regular": flags},
            [f"regular at e=0..{ns.emax}: {flags}"], [])


def _cmd_cdepth_lb(ns, budget):
    ring = parse_ring(ns.ring)
    M = _module_arg(ns, ring)
    rep = cdepth_lower_bound(M, ns.emax, seed=ns.seed, budget=budget)
    lines = [f"lower bound: {rep.bound} "
             f"({'exhaustive' if rep.exhaustive else 'budget'})",
             "witness: (" + ", ".join(str(w) for w in rep.witness) + ")"]
    return ({"bound": rep.bound, "witness": [str(w) for w in rep.witness],
             "exhaustive": rep.exhaustive, "seed": rep.seed}, lines, [])


def _cmd_kdepth_profile(ns, budget):
    ring = parse_ring(ns.ring)
    M = _module_arg(ns, ring)
    rep = kdepth_truncation_profile(M, ns.emax, budget=budget)
    profs = [{"e": e, "nonzero_homology": sorted(p.nonzero_homology),
              "kgrade": p.kgrade} for e, p in enumerate(rep.profiles)]
    lines = [f"e={pr['e']}: H nonzero at {pr['nonzero_homology']} "
             f"(kgrade {pr['kgrade']})" for pr in profs]
    stable = rep.stable_kgrade if rep.stable_kgrade is not None else "unresolved"
    lines.append(f"stable kgrade: {stable}; matches sdepth: {rep.matches_sdepth}")
    unresolved = ["profile pattern not stable"] if not rep.stable else []
    return ({"profiles": profs, "stable": rep.stable, "stable_kgrade": stable,
             "sdepth": rep.sdepth_value, "matches_sdepth": rep.matches_sdepth},
            lines, unresolved)


def _cmd_gamma(ns, budget):
    ring = parse_ring(ns.ring)
    text = ns.roots.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts, depthn, cur = [], 0, []
    for ch in text:
        if ch == "," and depthn == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depthn += 1
        elif ch == ")":
            depthn -= 1
        cur.append(ch)
    if cur:
        parts.append("".join(cur))
    roots = [parse_root(p.strip(), ring) for p in parts if p.strip()]
    J = PerfectClosureIdeal(ring, roots)
    try:
        rep = gamma_fseq(J, ns.levels, ns.lift_cap, budget)
    except Unresolved as exc:
        return ({"terms": "unresolved"}, ["gamma: unresolved"], [str(exc)])
    terms = [_basis_list(t, budget) for t in rep.sequence.terms]
    lines = [f"J_{e} = (" + ", ".join(t) + ")" for e, t in enumerate(terms)]
    lines.append(f"f-sequence verified: {rep.verified}")
    return ({"terms": terms, "verified": rep.verified,
             "levels_used": list(rep.levels_used)}, lines, [])


def _cmd_member_inf(ns, budget):
    ring = parse_ring(ns.ring)
    f = parse_poly(ns.poly, ring.free())
    ans = extended_ideal_membership(f, _ideal_arg(ns, ring), ns.emax, budget)
    val = "unresolved" if ans is None else ans
    unresolved = ["membership undecided within e_max"] if ans is None else []
    return {"member": val}, [f"member of the extension-contraction: {val}"], unresolved


def _cmd_prime_check(ns, budget):
    ring = parse_ring(ns.ring)
    P = _ideal_arg(ns, ring)
    rep = prime_extension_check(P, ns.levels, budget)
    levels = [{"level": rec.level, "radical_ok": rec.radical_ok,
               "contraction_ok": rec.contraction_ok, "order_ok": rec.order_ok,
               "passed": rec.passed} for rec in rep.levels]
    lines = [f"level {rec['level']}: "
             f"{'pass' if rec['passed'] else 'FAIL'}" for rec in levels]
    lines.append(f"overall: {'pass' if rep.passed else 'FAIL'}")
    return {"levels": levels, "passed": rep.passed}, lines, []


HANDLERS = {
    "gb": _cmd_gb, "colon": _cmd_colon, "frobpow": _cmd_frobpow,
    "frobpre": _cmd_frobpre, "closure": _cmd_closure, "closed": _cmd_closed,
    "fedder": _cmd_fedder, "fseq-verify": _cmd_fseq_verify,
    "fseq-radical": _cmd_fseq_radical, "ass": _cmd_ass,
    "ass-union": _cmd_ass_union, "depth": _cmd_depth, "sdepth": _cmd_sdepth,
    "reg-check": _cmd_reg_check, "cdepth-lb": _cmd_cdepth_lb,
    "kdepth-profile": _cmd_kdepth_profile, "gamma": _cmd_gamma,
    "member-inf": _cmd_member_inf, "prime-check": _cmd_prime_check,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="charp",
        description="exact characteristic-p commutative algebra")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="structured output with stable field names")
    common.add_argument("--budget", type=int, default=DEFAULTS["budget"],
                        help="reduction-step budget")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        return p

    ring_opt = dict(required=True, help="ring text, e.g. F_2[x,y]/(x*y)")
    ideal_opt = dict(required=True, help="ideal text, e.g. (x, y^2)")

    p = add("gb", help="reduced Groebner basis")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--ideal", **ideal_opt)
    p.add_argument("--order", help="lex | grevlex | block:k")

    p = add("colon", help="ideal quotient (I : J)")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--ideal", **ideal_opt)
    p.add_argument("--by", required=True, help="the divisor ideal J")

    for name, helptext in (("frobpow", "bracket power J^[p^e]"),
                           ("frobpre", "preimage under the e-th Frobenius")):
        p = add(name, help=helptext)
        p.add_argument("--ring", **ring_opt)
        p.add_argument("--ideal", **ideal_opt)
        p.add_argument("--e", type=int, default=1)

    for name, helptext in (("closure", "Frobenius closure"),
                           ("closed", "is the ideal Frobenius closed?")):
        p = add(name, help=helptext)
        p.add_argument("--ring", **ring_opt)
        p.add_argument("--ideal", **ideal_opt)
        p.add_argument("--emax", type=int, default=DEFAULTS["e_max"])

    p = add("fedder", help="F-purity of a quotient ring")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--max-ideal", help="maximal ideal generators (default: variables)")

    for name in ("fseq-verify", "fseq-radical", "ass-union"):
        p = add(name, help={"fseq-verify": "check the defining property",
                            "fseq-radical": "stable radical of the chain",
                            "ass-union": "union of Ass along the chain"}[name])
        p.add_argument("--ring", **ring_opt)
        p.add_argument("--family", choices=("bracket", "constant", "list"),
                       default="bracket")
        p.add_argument("--ideal", help="base ideal for bracket/constant families")
        p.add_argument("--levels", type=int, default=DEFAULTS["e_max"])
        p.add_argument("--terms", help="explicit terms '(..);(..);..' for --family list")
        if name == "fseq-radical":
            p.add_argument("--emax", type=int, default=8)

    p = add("ass", help="associated primes (monomial) or depth-zero point test")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--ideal", **ideal_opt)
    p.add_argument("--point", help="comma-separated coordinates of a rational point")

    for name in ("depth", "sdepth", "reg-check", "cdepth-lb", "kdepth-profile"):
        p = add(name, help={"depth": "depth at the origin",
                            "sdepth": "stabilizing depth",
                            "reg-check": "per-level regular-sequence check",
                            "cdepth-lb": "all-level regular-sequence bound",
                            "kdepth-profile": "Koszul profiles per level"}[name])
        p.add_argument("--ring", **ring_opt)
        p.add_argument("--ideal", help="cyclic module R/I")
        p.add_argument("--matrix", help="presentation matrix '[a, b; c, d]'")
        if name == "depth":
            p.add_argument("--no-cross-check", action="store_true")
        if name in ("sdepth", "reg-check", "cdepth-lb", "kdepth-profile"):
            p.add_argument("--emax", type=int, default=DEFAULTS["e_max"])
        if name == "sdepth":
            p.add_argument("--window", type=int, default=DEFAULTS["window"])
        if name == "cdepth-lb":
            p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
        if name == "reg-check":
            p.add_argument("--elements", required=True,
                           help="sequence to test, e.g. (x+y+z)")

    p = add("gamma", help="contraction chain of a root-generated ideal")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--roots", required=True,
                   help="root generators '(root(1,x), y)'")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--lift-cap", type=int, default=DEFAULTS["lift_cap"])

    p = add("member-inf", help="membership in the extension-contraction of an ideal")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--poly", required=True)
    p.add_argument("--ideal", **ideal_opt)
    p.add_argument("--emax", type=int, default=DEFAULTS["e_max"])

    p = add("prime-check", help="spectrum homeomorphism evidence for a prime")
    p.add_argument("--ring", **ring_opt)
    p.add_argument("--ideal", **ideal_opt)
    p.add_argument("--levels", type=int, default=3)

    p = add("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(set(SUITE_NAMES) | set(SUITE_ALIASES)))
    p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report to this path")
    return parser


def _inputs_dict(ns):
    skip = {"command", "json", "budget", "func"}
    out = {}
    for k, v in sorted(vars(ns).items()):
        if k in skip or v is None:
            continue
        out[k] = v
    return out


def main(argv=None):
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, matching the parse-error contract
        return int(exc.code or 0)

    if ns.command == "verify":
        report = run_suite(ns.suite, seed=ns.seed, count=ns.count,
                           jobs=ns.jobs, budget_limit=ns.budget)
        payload = json.dumps(report.to_dict(), indent=2, sort_keys=True)
        if ns.out:
            with open(ns.out, "w") as fh:
                fh.write(payload + "\n")
        print(payload if ns.json else report.render_text())
        return report.exit_code

    budget = Budget(ns.budget)
    try:
        result, lines, unresolved = HANDLERS[ns.command](ns, budget)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        partial = {"command": ns.command, "inputs": _inputs_dict(ns),
                   "result": None, "budget_used": exc.used,
                   "unresolved_reasons": ["budget exceeded"]}
        print(json.dumps(partial, indent=2, sort_keys=True) if ns.json
              else f"budget exceeded after {exc.used} reduction steps",
              file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except (ValueError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2

    if ns.json:
        out = {"command": ns.command, "inputs": _inputs_dict(ns),
               "result": result, "budget_used": budget.used,
               "unresolved_reasons": unresolved}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        for reason in unresolved:
            print(f"unresolved: {reason}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
