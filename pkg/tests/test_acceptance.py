"""Acceptance suite: every criterion is exact (zero tolerance) and prints
one pass/fail line.  Run with -s (or read the -rP summary) to see the lines.
"""

import random

import pytest

from conftest import (
    CHEVALLEY_PAIRS,
    NONSEMISIMPLE_NAMES,
    ZOO_NAMES,
    mutate_algebra,
)
from hopfgauge import zoo
from hopfgauge.cyclotomic import CycNum
from hopfgauge.hopf import (
    kmn_indicator,
    ord_antipode,
    trace_antipode_power,
    vec_eq,
    verify_hopf,
)
from hopfgauge.linalg import Mat
from hopfgauge.structure import (
    IntegralPair,
    integral_identity_check,
    integrals,
    is_chevalley,
    jacobson_radical,
    nilpotent_composite_check,
    radford_trace,
    radical_contains,
)
from hopfgauge.twist import (
    beta_fixed_check,
    gamma_coproduct_check,
    gamma_power,
    gamma_unity_check,
    grouplike_check,
    invariance_report,
    regular_object_test,
)

PAIR_LABELS = [p[0] for p in CHEVALLEY_PAIRS]


def _report(num: int, label: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num:02d} {label}: {status}{suffix}")
    assert ok, f"criterion {num} failed: {label}{suffix}"


@pytest.fixture(scope="module")
def pair_reports(chevalley_twists):
    """Invariance reports shared by criteria 5, 6 and 7."""
    out = {}
    for label in PAIR_LABELS:
        H, T, pair = chevalley_twists[label]
        out[label] = invariance_report(H, T, pair=pair)
    return out


def test_criterion_01_semisimple_trace_law(zoo_algebras):
    bad = [
        name
        for name in ("z2", "z4", "s3", "dual-s3")
        if trace_antipode_power(zoo_algebras[name], 2) != zoo_algebras[name].dim
    ]
    _report(1, "semisimple trace law Tr(S^2) = dim", not bad, ", ".join(bad))


def test_criterion_02_nonsemisimple_trace_law(zoo_algebras):
    bad = [
        name
        for name in NONSEMISIMPLE_NAMES
        if trace_antipode_power(zoo_algebras[name], 2) != 0
    ]
    _report(2, "nonsemisimple trace law Tr(S^2) = 0", not bad, ", ".join(bad))


def test_criterion_03_semisimple_beta_fixed(semisimple_twists):
    bad = [
        label
        for label, (H, T) in semisimple_twists.items()
        if not beta_fixed_check(H, T).antipode_fixes_beta
    ]
    _report(3, "S(beta) = beta on semisimple twists", not bad, ", ".join(bad))


def test_criterion_04_beta_difference_in_radical(chevalley_twists):
    bad = []
    for label in PAIR_LABELS:
        H, T, pair = chevalley_twists[label]
        rad = jacobson_radical(pair.base)
        if not beta_fixed_check(pair.base, T, rad).difference_in_radical:
            bad.append(label)
    _report(4, "S(beta) - beta in the radical", not bad, ", ".join(bad))


def test_criterion_05_trace_powers_invariant(pair_reports):
    bad = []
    for label, rep in pair_reports.items():
        ord_s = rep.base_table.ord_s
        if min(rep.base_table.trace_powers) > -2 * ord_s or rep.trace_diffs:
            bad.append(f"{label}:{rep.trace_diffs}")
    _report(5, "Tr(S_F^n) = Tr(S^n) over two periods", not bad, ", ".join(bad))


def test_criterion_06_antipode_orders_invariant(pair_reports):
    bad = [label for label, rep in pair_reports.items() if not rep.ord_match]
    _report(6, "ord(S_F) = ord(S), ord(S_F^2) = ord(S^2)", not bad, ", ".join(bad))


def test_criterion_07_kmn_invariant(pair_reports, zoo_algebras):
    bad = []
    for label, rep in pair_reports.items():
        if rep.kmn_diffs or max(rep.base_table.kmn) < 12:
            bad.append(f"{label}:{rep.kmn_diffs}")
    for name in ZOO_NAMES:
        H = zoo_algebras[name]
        if kmn_indicator(H, 0) != trace_antipode_power(H, 2):
            bad.append(f"{name}:nu0")
        if kmn_indicator(H, 2) != trace_antipode_power(H, 1):
            bad.append(f"{name}:nu2")
    _report(7, "indicator invariance and nu0/nu2 identities", not bad, ", ".join(bad))


def test_criterion_08_trace_formula(zoo_algebras):
    rng = random.Random(0)
    bad = []
    for name in ZOO_NAMES:
        H = zoo_algebras[name]
        pair = integrals(H)
        for t in range(100):
            T = Mat(
                [[rng.randint(-9, 9) for _ in range(H.dim)] for _ in range(H.dim)],
                H.conductor,
            )
            if radford_trace(H, T, pair) != T.trace():
                bad.append(f"{name}:trial{t}")
                break
        if not integral_identity_check(H, pair):
            bad.append(f"{name}:identity")
    _report(8, "integral trace formula, 100 seeded matrices each", not bad,
            ", ".join(bad))


def test_criterion_09_nilpotent_composites(zoo_algebras):
    rng = random.Random(0)
    bad = []
    for name in ("sweedler", "taft-3"):
        H = zoo_algebras[name]
        rad = jacobson_radical(H)
        powers = [H.antipode, H.antipode_sq, H.antipode_sq @ H.antipode]
        for t in range(50):
            x = H.zero_vec()
            for v in rad.radical_basis:
                c = rng.randint(-3, 3)
                x = [a + c * b for a, b in zip(x, v)]
            a = [
                CycNum.from_rational(rng.randint(-3, 3), H.conductor)
                for _ in range(H.dim)
            ]
            T = powers[rng.randrange(3)]
            side = rng.choice(("left", "right"))
            if not nilpotent_composite_check(H, x, a, T, side, rad):
                bad.append(f"{name}:trial{t}")
                break
    _report(9, "l(x)r(a)T composites nilpotent, 50 seeded draws", not bad,
            ", ".join(bad))


def test_criterion_10_gamma_grouplike_and_coproduct(chevalley_twists):
    bad = []
    for label in PAIR_LABELS:
        H, T, pair = chevalley_twists[label]
        _, ord_s2 = ord_antipode(pair.base)
        gp = gamma_power(T, pair.base, ord_s2)
        if not grouplike_check(pair.twisted, gp):
            bad.append(f"{label}:grouplike")
        if not gamma_coproduct_check(pair.base, T):
            bad.append(f"{label}:coproduct")
    _report(10, "gamma power grouplike and coproduct identity", not bad,
            ", ".join(bad))


def test_criterion_11_regular_object_and_gamma_unity(chevalley_twists):
    bad = []
    for label in PAIR_LABELS:
        H, T, pair = chevalley_twists[label]
        base = pair.base
        res = regular_object_test(base, T, seed=0)
        if res.status != "witness-found":
            bad.append(f"{label}:{res.status}")
            continue
        t = res.witness
        if not vec_eq(base.mul(base.antipode_sq.apply(t), T.gamma_inv), t):
            bad.append(f"{label}:substitution")
        if base.element_inverse(t) is None:
            bad.append(f"{label}:unit")
        _, ord_s2 = ord_antipode(base)
        if not gamma_unity_check(base, T, ord_s2):
            bad.append(f"{label}:gamma-unity")
    _report(11, "regular object witness and trivial gamma product", not bad,
            ", ".join(bad))


def test_criterion_12_generalized_taft_structure():
    bad = []
    for n, d in ((1, 2), (2, 2), (1, 3), (2, 3)):
        H = zoo.generalized_taft(n, d)
        _, ord_s2 = ord_antipode(H)
        if ord_s2 != d:
            bad.append(f"({n},{d}):ord")
        res = is_chevalley(H)
        if not res.chevalley or res.quotient.dim != n * d:
            bad.append(f"({n},{d}):quotient")
    _report(12, "generalized Taft ord(S^2) = d, quotient dim nd", not bad,
            ", ".join(bad))


def test_criterion_13_pivotalization(zoo_algebras):
    bad = []
    cases = [
        ("sweedler", zoo_algebras["sweedler"], 2),
        ("taft-3", zoo_algebras["taft-3"], 3),
        ("s3", zoo_algebras["s3"], 1),
    ]
    for name, H, N in cases:
        P = zoo.pivotalization(H, N)
        if P.dim != N * H.dim or not verify_hopf(P).ok:
            bad.append(f"{name}:axioms")
            continue
        xgen = P.zero_vec()
        for i, u in enumerate(H.unit):
            xgen[i * N + (1 % N)] = u.lift(P.conductor)
        if N > 1 and not grouplike_check(P, xgen):
            bad.append(f"{name}:grouplike")
            continue
        xinv = P.element_inverse(xgen)
        S2 = H.antipode_sq
        for i in range(H.dim):
            emb = P.zero_vec()
            emb[i * N] = P.one_c
            conj = P.mul(P.mul(xgen, emb), xinv)
            want = P.zero_vec()
            for k, c in enumerate(S2.column(i)):
                want[k * N] = c.lift(P.conductor)
            if not vec_eq(conj, want):
                bad.append(f"{name}:conjugation@{i}")
                break
    _report(13, "pivotalization smash product", not bad, ", ".join(bad))


def test_criterion_14_mutation_robustness(zoo_algebras, chevalley_twists):
    rng = random.Random(0)
    bad = []
    for name in ZOO_NAMES:
        H = zoo_algebras[name]
        for t in range(100):
            mutant, where = mutate_algebra(H, rng)
            if verify_hopf(mutant).ok:
                bad.append(f"{name}:{where}")
                break
    # mutated integrals break the integral identity
    for name in ("sweedler", "taft-3"):
        H = zoo_algebras[name]
        pair = integrals(H)
        broken = list(pair.left_integral)
        broken[0] = broken[0] + 1
        if integral_identity_check(H, IntegralPair(broken, pair.right_cointegral)):
            bad.append(f"{name}:integral-mutation")
    # mutated gamma breaks the coproduct identity
    for label in ("sweedler-c1", "taft-3-c1"):
        H, T, pair = chevalley_twists[label]
        base = pair.base
        rad = jacobson_radical(base)
        shifted = [a + b for a, b in zip(T.gamma, rad.radical_basis[0])]
        if not radical_contains(rad, [a - b for a, b in zip(shifted, T.gamma)]):
            bad.append(f"{label}:not-radical-shift")
        if gamma_coproduct_check(base, T, gamma=shifted):
            bad.append(f"{label}:gamma-mutation")
    _report(14, "mutation robustness, 100 seeded mutations per algebra", not bad,
            ", ".join(bad))
