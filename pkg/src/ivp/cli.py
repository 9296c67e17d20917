"""Command-line interface: ``ivp <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .closure import closure_member, in_Sfd, load_generators, z_closure_witness
from .dedekind import dedekind_divides_index, index_one_certificate
from .exact import DEFAULT_SEED, AlgebraicElement, ReducibleError
from .families import crosscheck_family, family_verdict, make_family
from .ivptests import BudgetExceeded, integral_value_charpoly, psi, psi_lcm_oracle, psi_membership_check
from .newton import parse_val, val_str
from .poly import parse_poly
from .sequences import ValuationMatrix, ball_cover, classify_prefix, residue_classes, theorem24_crosscheck
from .verify import UsageError, run_verify_paper


def _element(args) -> AlgebraicElement:
    return AlgebraicElement(parse_poly(args.min), parse_poly(args.expr))


def _matrix(path: str) -> ValuationMatrix:
    return ValuationMatrix.from_json(Path(path).read_text())


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2, sort_keys=True) if args.json else text)


def cmd_index(args) -> int:
    f = parse_poly(args.min)
    if args.prime:
        divides, witness = dedekind_divides_index(f, args.prime, seed=args.seed)
        data = {"min_poly": str(f), "prime": args.prime, "divides": divides,
                "witness": None if witness is None else str(witness)}
        _emit(args, data, f"{args.prime} divides the index of {f}: {divides}" + (f" (witness {witness})" if witness else ""))
        return 0
    rep = index_one_certificate(f, seed=args.seed)
    lines = [f"disc = {rep.disc}", f"index is one: {rep.index_is_one.value}"]
    lines += [f"  p = {t.p}: divides = {t.divides}" + (f", witness {t.witness}" if t.witness else "") for t in rep.tested_primes]
    if rep.unfactored_part > 1:
        lines.append(f"  unfactored part: {rep.unfactored_part}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0


def cmd_psi(args) -> int:
    data = {"p": args.p, "n": args.n, "psi": str(psi(args.p, args.n))}
    lines = [f"Psi_{{{args.p},{args.n}}} = {data['psi']}"]
    if args.oracle:
        data["lcm_oracle"] = psi_lcm_oracle(args.p, args.n)
        lines.append(f"equals lcm of monic polynomials of degree <= {args.n} mod {args.p}: {data['lcm_oracle']}")
    if args.min:
        data["member"] = psi_membership_check(args.p, args.n, _element(args))
        lines.append(f"Psi(a)/{args.p} integral: {data['member']}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_integral(args) -> int:
    e = _element(args)
    if args.f:
        e = e.apply(parse_poly(args.f))
    cp = integral_value_charpoly(e, args.d)
    data = {"char_poly": str(cp), "integral": cp.is_integral()}
    _emit(args, data, f"char poly {cp}\nintegral: {data['integral']}")
    return 0


def cmd_classify(args) -> int:
    m = _matrix(args.matrix)
    rep = classify_prefix(m, limit=parse_val(args.limit) if args.limit else None)
    data = rep.to_json()
    lines = [f"kind: {data['kind']}", f"gauge: {', '.join(data['gauge'])}",
             f"breadth: {data['breadth']}  hint: {data['breadth_ideal_hint']}", data["caveat"]]
    if rep.reason:
        lines.append(f"reason: {rep.reason}")
    if args.crosscheck:
        cc = theorem24_crosscheck(m)
        data["crosscheck"] = {"ok": cc.ok, "grid": [val_str(g) for g in cc.grid], "failures": cc.failures}
        lines.append(f"cover/class crosscheck: {'ok' if cc.ok else cc.failures}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_cover(args) -> int:
    m = _matrix(args.matrix)
    delta = parse_val(args.delta)
    cover = ball_cover(m, delta)
    classes = residue_classes(m, delta)
    data = {"delta": val_str(delta), "cover": list(cover), "classes": [list(c) for c in classes]}
    _emit(args, data, f"minimal cover ({len(cover)}): {list(cover)}\nresidue classes ({len(classes)}): {data['classes']}")
    return 0


def cmd_family(args) -> int:
    params = {k: getattr(args, k) for k in ("p", "n", "c", "d", "len") if getattr(args, k) is not None}
    if args.ns:
        params["ns"] = [int(x) for x in args.ns.split(",")]
    sample = make_family(args.kind, params)
    data = sample.to_json()
    lines = [f"{sample.kind.value}: {sample.provenance}"]
    lines += [f"  s_{i} = {e.label}: {e.min_poly}  [{e.certificate}]" for i, e in enumerate(sample.elements, 1)]
    if args.prime:
        v = family_verdict(sample, args.prime)
        data["verdict"] = v.to_json()
        r = v.report
        lines.append(f"at {args.prime}: {r.kind.value}, gauge {', '.join(val_str(g) for g in r.gauge)}, "
                     f"hint {r.breadth_ideal_hint}; {r.caveat}" + (f"; {r.reason}" if r.reason else ""))
        lines.append(f"conclusion: {v.conclusion} ({v.mechanism}), evidence ok: {v.evidence_ok}")
        if args.crosscheck:
            cc = crosscheck_family(sample, args.prime)
            data["crosscheck"] = cc.to_json()
            lines.append(f"formula crosscheck: {cc.checked} checked, ok = {cc.ok}")
            lines += [f"  MISMATCH {i.what}: expected {val_str(i.expected)}" for i in cc.discrepancies()]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_closure(args) -> int:
    gens = load_generators(json.loads(Path(args.gens).read_text()))
    e = _element(args)
    per = [{"gen": g.to_json(), "member": in_Sfd(e, g)} for g in gens]
    member = closure_member(gens, e)
    data = {"member": member, "generators": per}
    lines = [f"  ({g['gen']['f']})/{g['gen']['d']}: {g['member']}" for g in per]
    _emit(args, data, "\n".join(lines + [f"in closure: {member}"]))
    return 0


def cmd_zwitness(args) -> int:
    w = z_closure_witness(_element(args), args.kmax)
    if w is None:
        data = {"witness": None, "status": "inconclusive"}
        text = f"no binomial witness with k <= {args.kmax} (inconclusive)"
    else:
        data = {"witness": w.to_json(), "status": "outside"}
        text = f"binomial(a, {w.k}) is not integral; char poly {w.char_poly}"
    _emit(args, data, text)
    return 0


def cmd_verify(args) -> int:
    rep = run_verify_paper(args.filter, seed=args.seed, jobs=args.jobs)
    if args.out:
        out = Path(args.out)
        out.with_suffix(".json").write_text(rep.dumps() + "\n")
        out.with_suffix(".txt").write_text(rep.text() + "\n")
    print(rep.dumps() if args.json else rep.text())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized factoring")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="parallel workers for verify-paper")

    parser = argparse.ArgumentParser(prog="ivp", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    def element_args(p, required=True):
        p.add_argument("--min", required=required, help='minimal polynomial, e.g. "x^2-2"')
        p.add_argument("--expr", default="x", help="element as a polynomial in the root (default x)")

    p = add("index", cmd_index, "index-one certificate or a single Dedekind test")
    p.add_argument("--min", required=True)
    p.add_argument("--prime", type=int)

    p = add("psi", cmd_psi, "the polynomial Psi_{p,n} and its checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with the brute-force lcm")
    element_args(p, required=False)

    p = add("integral", cmd_integral, "is f(a)/d an algebraic integer")
    element_args(p)
    p.add_argument("--f", help="polynomial applied to the element first")
    p.add_argument("--d", type=int, default=1)

    p = add("classify", cmd_classify, "pseudo-monotone classification of a valuation matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--limit", help="known limit of the gauge, if any")
    p.add_argument("--crosscheck", action="store_true", help="also compare covers and residue classes")

    p = add("cover", cmd_cover, "minimal ball cover and residue classes")
    p.add_argument("--matrix", required=True)
    p.add_argument("--delta", required=True)

    p = add("family", cmd_family, "example families with closed-form valuations")
    p.add_argument("--kind", required=True)
    for name in ("p", "n", "c", "d", "len"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--ns", help="comma-separated degrees for the fcn family")
    p.add_argument("--prime", type=int, help="prime at which to classify")
    p.add_argument("--crosscheck", action="store_true")

    p = add("closure", cmd_closure, "membership in the closure given by generators")
    p.add_argument("--gens", required=True, help='JSON file: [{"f": "x", "d": 2}]')
    element_args(p)

    p = add("zwitness", cmd_zwitness, "binomial witness that an element is outside the closure of Z")
    element_args(p)
    p.add_argument("--kmax", type=int, default=8)

    p = add("verify-paper", cmd_verify, "rerun the registered example checks")
    p.add_argument("--filter", help="anchor substring")
    p.add_argument("--out", help="write <out>.json and <out>.txt")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("seed", DEFAULT_SEED), ("jobs", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, ReducibleError, BudgetExceeded, OSError, KeyError) as exc:
        print(f"ivp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
