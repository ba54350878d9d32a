"""Command line interface.

Exit codes are the machine contract: 0 when the command succeeds and the
checked property holds, 1 when a checked property fails, 2 on input errors.
All randomized procedures accept --seed and are reproducible given it.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cyclotomic import CycNum, ParseError, cyc_format
from .files import (
    SchemaError,
    load_algebra,
    load_twist,
    save_algebra,
    save_twist,
)
from .hopf import HopfAlgebra, sparse_eq, vec_eq, verify_hopf
from .linalg import Mat
from .structure import (
    integral_identity_check,
    integrals,
    invariant_table,
    is_chevalley,
    jacobson_radical,
    radford_trace,
)
from .twist import (
    TwistValidationError,
    beta_fixed_check,
    gamma_coproduct_check,
    gamma_power,
    gamma_unity_check,
    grouplike_check,
    invariance_report,
    regular_object_test,
    twist_hopf,
    validate_twist,
)
from . import zoo


def _emit(args, text_lines, payload) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _vec_str(vec) -> str:
    return "[" + ", ".join(cyc_format(c) for c in vec) + "]"


def _load_algebra_guarded(path: str, expect_name: str | None):
    af = load_algebra(path)
    if expect_name is not None and af.name != expect_name:
        raise SchemaError(
            f"algebra name {af.name!r} does not match --expect-name {expect_name!r}"
        )
    return af


def _bind_twist(H: HopfAlgebra, tf):
    if tf.dim != H.dim:
        raise SchemaError(
            f"twist dimension {tf.dim} does not match algebra dimension {H.dim}"
        )
    T = validate_twist(H, tf.F)
    if tf.F_inv is not None:
        HH = H.lift(T.conductor)
        given = {
            k: c.lift(T.conductor) for k, c in enumerate(tf.F_inv) if not c.is_zero()
        }
        if not sparse_eq(HH.mul2(T.f_sparse(), given), HH.unit_tensor2()):
            raise SchemaError("stored F_inv is not an inverse of F")
    return T


# -- subcommands ------------------------------------------------------------


def cmd_verify(args) -> int:
    af = load_algebra(args.algebra)
    report = verify_hopf(af.algebra)
    lines = [f"algebra {af.name}: dim {af.algebra.dim}, conductor {af.algebra.conductor}"]
    payload = {"name": af.name, "axioms": {}, "pass": report.ok}
    for name, check in report.checks.items():
        status = "pass" if check.passed else f"FAIL at {check.first_failure}"
        lines.append(f"  {name:<20} {status}")
        payload["axioms"][name] = {
            "pass": check.passed,
            "first_failure": list(check.first_failure) if check.first_failure else None,
        }
    _emit(args, lines, payload)
    return 0 if report.ok else 1


def _table_payload(table) -> dict:
    return {
        "dim": table.dim,
        "ord_s": table.ord_s,
        "ord_s2": table.ord_s2,
        "semisimple": table.semisimple,
        "chevalley": table.chevalley,
        "trace_powers": {str(n): cyc_format(v) for n, v in table.trace_powers.items()},
        "kmn": {str(n): cyc_format(v) for n, v in table.kmn.items()},
    }


def _table_lines(table, header: str):
    lines = [
        header,
        f"  dim {table.dim}, ord(S) = {table.ord_s}, ord(S^2) = {table.ord_s2}",
        f"  semisimple = {table.semisimple}, chevalley = {table.chevalley}",
        "  n : Tr(S^n)",
    ]
    for n in sorted(table.trace_powers):
        lines.append(f"  {n:4d} : {cyc_format(table.trace_powers[n])}")
    lines.append("  n : nu_n")
    for n in sorted(table.kmn):
        lines.append(f"  {n:4d} : {cyc_format(table.kmn[n])}")
    return lines


def _range_from(args, H) -> tuple[int, int]:
    if args.trace_min is not None or args.trace_max is not None:
        lo = args.trace_min if args.trace_min is not None else 0
        hi = args.trace_max if args.trace_max is not None else lo
        return (lo, hi)
    from .hopf import ord_antipode

    ord_s, _ = ord_antipode(H)
    return (-2 * ord_s, 2 * ord_s)


def cmd_invariants(args) -> int:
    af = load_algebra(args.algebra)
    table = invariant_table(af.algebra, _range_from(args, af.algebra), args.kmn_max)
    payload = {"name": af.name}
    payload.update(_table_payload(table))
    _emit(args, _table_lines(table, f"invariants of {af.name}"), payload)
    return 0


def cmd_radical(args) -> int:
    af = load_algebra(args.algebra)
    res = is_chevalley(af.algebra)
    rad = res.radical
    lines = [
        f"algebra {af.name}: radical dimension {rad.dim} of {af.algebra.dim}",
        f"  semisimple = {rad.dim == 0}",
        f"  chevalley  = {res.chevalley}" + (f" ({res.witness})" if res.witness else ""),
    ]
    for v in rad.radical_basis:
        lines.append(f"  radical basis vector: {_vec_str(v)}")
    payload = {
        "name": af.name,
        "radical_dim": rad.dim,
        "semisimple": rad.dim == 0,
        "chevalley": res.chevalley,
        "witness": res.witness,
        "radical_basis": [[cyc_format(c) for c in v] for v in rad.radical_basis],
    }
    code = 0
    if args.emit_quotient:
        if res.chevalley:
            save_algebra(args.emit_quotient, f"{af.name}-mod-radical", res.quotient)
            lines.append(f"  quotient written to {args.emit_quotient}")
            payload["quotient_path"] = args.emit_quotient
        else:
            lines.append("  no quotient: algebra is not Chevalley")
            code = 1
    _emit(args, lines, payload)
    return code


def cmd_integrals(args) -> int:
    af = load_algebra(args.algebra)
    H = af.algebra
    pair = integrals(H)
    rng = random.Random(args.seed)
    ok_trace = True
    for _ in range(args.trials):
        T = Mat(
            [[rng.randint(-9, 9) for _ in range(H.dim)] for _ in range(H.dim)],
            H.conductor,
        )
        if radford_trace(H, T, pair) != T.trace():
            ok_trace = False
            break
    ok_identity = integral_identity_check(H, pair)
    lines = [
        f"algebra {af.name}",
        f"  left integral     : {_vec_str(pair.left_integral)}",
        f"  right cointegral  : {_vec_str(pair.right_cointegral)}",
        f"  trace formula     : {'pass' if ok_trace else 'FAIL'} ({args.trials} random matrices, seed {args.seed})",
        f"  integral identity : {'pass' if ok_identity else 'FAIL'}",
    ]
    payload = {
        "name": af.name,
        "left_integral": [cyc_format(c) for c in pair.left_integral],
        "right_cointegral": [cyc_format(c) for c in pair.right_cointegral],
        "trace_formula_pass": ok_trace,
        "integral_identity_pass": ok_identity,
        "trials": args.trials,
        "seed": args.seed,
    }
    _emit(args, lines, payload)
    return 0 if ok_trace and ok_identity else 1


def cmd_twist_check(args) -> int:
    af = _load_algebra_guarded(args.algebra, args.expect_name)
    tf = load_twist(args.twist)
    try:
        T = _bind_twist(af.algebra, tf)
    except TwistValidationError as exc:
        _emit(
            args,
            [f"twist INVALID ({exc.reason}): {exc}"],
            {"valid": False, "reason": exc.reason, "message": str(exc)},
        )
        return 1
    lines = [
        f"twist on {af.name}: valid (conductor {T.conductor})",
        f"  beta  = {_vec_str(T.beta)}",
        f"  gamma = {_vec_str(T.gamma)}",
    ]
    payload = {
        "valid": True,
        "conductor": T.conductor,
        "beta": [cyc_format(c) for c in T.beta],
        "gamma": [cyc_format(c) for c in T.gamma],
    }
    _emit(args, lines, payload)
    return 0


def cmd_twist_apply(args) -> int:
    af = _load_algebra_guarded(args.algebra, args.expect_name)
    tf = load_twist(args.twist)
    try:
        T = _bind_twist(af.algebra, tf)
        pair = twist_hopf(af.algebra, T)
    except TwistValidationError as exc:
        print(f"twist INVALID ({exc.reason}): {exc}", file=sys.stderr)
        return 1
    save_algebra(args.output, f"{af.name}-twisted", pair.twisted)
    print(f"twisted algebra written to {args.output}")
    return 0


def cmd_twist_report(args) -> int:
    af = _load_algebra_guarded(args.algebra, args.expect_name)
    H = af.algebra
    tf = load_twist(args.twist)
    try:
        T = _bind_twist(H, tf)
        pair = twist_hopf(H, T)
    except TwistValidationError as exc:
        _emit(
            args,
            [f"twist INVALID ({exc.reason}): {exc}"],
            {"valid": False, "reason": exc.reason},
        )
        return 1
    base = pair.base
    chev = is_chevalley(base)
    rep = invariance_report(H, T, pair=pair)
    beta_res = beta_fixed_check(base, T, chev.radical)
    from .hopf import ord_antipode

    _, ord_s2 = ord_antipode(base)
    gpow = gamma_power(T, base, ord_s2)
    glike = grouplike_check(pair.twisted, gpow)
    gcop = gamma_coproduct_check(base, T)
    gunity = gamma_unity_check(base, T, ord_s2)
    ro = regular_object_test(base, T, seed=args.seed, chevalley=chev)

    lines = [
        f"twist report for {af.name}",
        f"  semisimple = {chev.radical.dim == 0}, chevalley = {chev.chevalley}",
        f"  trace diff indices : {rep.trace_diffs}",
        f"  indicator diffs    : {rep.kmn_diffs}",
        f"  orders match       : {rep.ord_match}",
        f"  S(beta) = beta           : {beta_res.antipode_fixes_beta}",
        f"  S(beta) - beta in radical: {beta_res.difference_in_radical}",
        f"  gamma power grouplike    : {glike}",
        f"  gamma coproduct identity : {gcop}",
        f"  gamma product trivial    : {gunity}",
        f"  regular object           : {ro.status} (seed {args.seed})",
    ]
    payload = {
        "name": af.name,
        "valid": True,
        "semisimple": chev.radical.dim == 0,
        "chevalley": chev.chevalley,
        "trace_diffs": rep.trace_diffs,
        "kmn_diffs": rep.kmn_diffs,
        "ord_match": rep.ord_match,
        "antipode_fixes_beta": beta_res.antipode_fixes_beta,
        "beta_difference_in_radical": beta_res.difference_in_radical,
        "gamma_power_grouplike": glike,
        "gamma_coproduct_identity": gcop,
        "gamma_unity": gunity,
        "regular_object": ro.status,
        "base_table": _table_payload(rep.base_table),
        "twisted_table": _table_payload(rep.twisted_table),
    }
    _emit(args, lines, payload)
    # asserted properties: for a Chevalley base every check must hold;
    # otherwise the diff is exploratory output
    if chev.chevalley:
        ok = (
            rep.clean
            and beta_res.difference_in_radical
            and glike
            and gcop
            and gunity
            and ro.status == "witness-found"
        )
        if chev.radical.dim == 0:
            ok = ok and beta_res.antipode_fixes_beta
        return 0 if ok else 1
    return 0


def cmd_compare(args) -> int:
    a = load_algebra(args.algebra_a)
    b = load_algebra(args.algebra_b)
    from .hopf import ord_antipode

    ord_a, _ = ord_antipode(a.algebra)
    ord_b, _ = ord_antipode(b.algebra)
    hi = 2 * max(ord_a, ord_b)
    rng = (-hi, hi)
    ta = invariant_table(a.algebra, rng, args.kmn_max)
    tb = invariant_table(b.algebra, rng, args.kmn_max)
    trace_diffs = [n for n in ta.trace_powers if ta.trace_powers[n] != tb.trace_powers[n]]
    kmn_diffs = [n for n in ta.kmn if ta.kmn[n] != tb.kmn[n]]
    agree = (
        not trace_diffs
        and not kmn_diffs
        and ta.dim == tb.dim
        and ta.ord_s == tb.ord_s
        and ta.ord_s2 == tb.ord_s2
    )
    lines = _table_lines(ta, f"algebra A: {a.name}")
    lines += _table_lines(tb, f"algebra B: {b.name}")
    lines.append(f"trace diff indices: {trace_diffs}")
    lines.append(f"indicator diff indices: {kmn_diffs}")
    lines.append(f"tables agree: {agree}")
    payload = {
        "a": _table_payload(ta),
        "b": _table_payload(tb),
        "trace_diffs": trace_diffs,
        "kmn_diffs": kmn_diffs,
        "agree": agree,
    }
    _emit(args, lines, payload)
    return 0 if agree else 1


def _load_cayley(path: str) -> zoo.GroupPresentation:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise SchemaError("Cayley file must be an object with a 'table' field")
    unknown = set(data) - {"table", "labels"}
    if unknown:
        raise SchemaError(f"Cayley file has unknown fields: {sorted(unknown)}")
    return zoo.GroupPresentation.from_table(data["table"], data.get("labels"))


def _group_from_args(args) -> tuple[zoo.GroupPresentation, str]:
    given = [
        args.cayley is not None,
        args.cyclic is not None,
        args.symmetric is not None,
    ]
    if sum(given) != 1:
        raise SchemaError("give exactly one of --cayley, --cyclic, --symmetric")
    if args.cayley:
        return _load_cayley(args.cayley), "group"
    if args.cyclic is not None:
        return zoo.cyclic_group(args.cyclic), f"z{args.cyclic}"
    return zoo.symmetric_group(args.symmetric), f"s{args.symmetric}"


def cmd_zoo(args) -> int:
    family = args.family
    if family == "group":
        G, stem = _group_from_args(args)
        H = zoo.group_algebra(G)
        name = args.name or stem
        save_algebra(args.output, name, H, G.labels)
    elif family == "dual-group":
        G, stem = _group_from_args(args)
        H = zoo.dual_group_algebra(G)
        name = args.name or f"dual-{stem}"
        save_algebra(args.output, name, H, G.labels)
    elif family == "sweedler":
        save_algebra(args.output, args.name or "sweedler", zoo.sweedler(),
                     ("1", "g", "x", "gx"))
    elif family == "taft":
        H = zoo.taft(args.n, args.zeta_exp)
        save_algebra(args.output, args.name or f"taft-{args.n}", H)
    elif family == "generalized-taft":
        H = zoo.generalized_taft(args.n, args.d, args.zeta_exp)
        save_algebra(
            args.output, args.name or f"generalized-taft-{args.n}-{args.d}", H
        )
    elif family == "pivotalize":
        af = load_algebra(args.algebra)
        H = zoo.pivotalization(af.algebra, args.n)
        save_algebra(args.output, args.name or f"{af.name}-{args.n}piv", H)
    elif family == "bichar-twist":
        af = load_algebra(args.algebra)
        H = af.algebra
        F = zoo.bicharacter_twist(H, H.basis_vec(args.gen), args.order, args.c)
        conductor = F[0].conductor
        save_twist(args.output, conductor, H.dim, F)
    else:  # pragma: no cover - argparse restricts choices
        raise SchemaError(f"unknown zoo family {family!r}")
    print(f"{family} written to {args.output}")
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfgauge",
        description="Exact gauge invariants of finite-dimensional Hopf algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check all Hopf axioms")
    p.add_argument("algebra")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariants", help="trace powers, indicators, orders, flags")
    p.add_argument("algebra")
    p.add_argument("--trace-min", type=int, default=None)
    p.add_argument("--trace-max", type=int, default=None)
    p.add_argument("--kmn-max", type=int, default=12)
    add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("radical", help="Jacobson radical and Chevalley verdict")
    p.add_argument("algebra")
    p.add_argument("--emit-quotient", metavar="PATH", default=None)
    add_format(p)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("integrals", help="integral pair and trace-formula self-test")
    p.add_argument("algebra")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("twist", help="twist operations")
    tsub = p.add_subparsers(dest="twist_command", required=True)

    tp = tsub.add_parser("check", help="validate a twist against an algebra")
    tp.add_argument("algebra")
    tp.add_argument("twist")
    tp.add_argument("--expect-name", default=None)
    add_format(tp)
    tp.set_defaults(func=cmd_twist_check)

    tp = tsub.add_parser("apply", help="emit the twisted Hopf algebra")
    tp.add_argument("algebra")
    tp.add_argument("twist")
    tp.add_argument("-o", "--output", required=True)
    tp.add_argument("--expect-name", default=None)
    tp.set_defaults(func=cmd_twist_apply)

    tp = tsub.add_parser("report", help="full gauge invariance report")
    tp.add_argument("algebra")
    tp.add_argument("twist")
    tp.add_argument("--seed", type=int, default=0)
    tp.add_argument("--expect-name", default=None)
    add_format(tp)
    tp.set_defaults(func=cmd_twist_report)

    p = sub.add_parser("zoo", help="constructors for the built-in families")
    p.add_argument(
        "family",
        choices=(
            "group",
            "dual-group",
            "sweedler",
            "taft",
            "generalized-taft",
            "pivotalize",
            "bichar-twist",
        ),
    )
    p.add_argument("algebra", nargs="?", default=None,
                   help="input algebra (pivotalize, bichar-twist)")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--cayley", metavar="PATH", default=None)
    p.add_argument("--cyclic", type=int, default=None, metavar="M")
    p.add_argument("--symmetric", type=int, default=None, metavar="N")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--zeta-exp", type=int, default=1)
    p.add_argument("--gen", type=int, default=None, metavar="INDEX")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("compare", help="side-by-side invariant tables")
    p.add_argument("algebra_a")
    p.add_argument("algebra_b")
    p.add_argument("--kmn-max", type=int, default=12)
    add_format(p)
    p.set_defaults(func=cmd_compare)

    return parser


def _check_zoo_args(args) -> None:
    fam = args.family
    need_algebra = fam in ("pivotalize", "bichar-twist")
    if need_algebra and args.algebra is None:
        raise SchemaError(f"family {fam} needs an input algebra path")
    if fam in ("taft",) and args.n is None:
        raise SchemaError("taft needs --n")
    if fam == "generalized-taft" and (args.n is None or args.d is None):
        raise SchemaError("generalized-taft needs --n and --d")
    if fam == "pivotalize" and args.n is None:
        raise SchemaError("pivotalize needs --n")
    if fam == "bichar-twist" and (
        args.gen is None or args.order is None or args.c is None
    ):
        raise SchemaError("bichar-twist needs --gen, --order and --c")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "command", None) == "zoo":
            _check_zoo_args(args)
        return args.func(args)
    except (SchemaError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TwistValidationError as exc:
        print(f"twist INVALID ({exc.reason}): {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
