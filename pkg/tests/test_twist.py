"""Twist validation, the twisted algebra, beta/gamma machinery, invariance."""

import pytest

from conftest import CHEVALLEY_PAIRS
from hopfgauge import zoo
from hopfgauge.hopf import ord_antipode, sparse_eq, vec_eq, verify_hopf
from hopfgauge.linalg import Mat
from hopfgauge.structure import is_chevalley, jacobson_radical
from hopfgauge.twist import (
    TwistValidationError,
    beta_fixed_check,
    gamma_coproduct_check,
    gamma_power,
    gamma_unity_check,
    grouplike_check,
    identity_twist,
    invariance_report,
    regular_object_test,
    twist_hopf,
    validate_twist,
)


def test_identity_twist_is_trivial(zoo_algebras):
    sw = zoo_algebras["sweedler"]
    T = identity_twist(sw)
    assert vec_eq(T.beta, list(sw.unit))
    assert vec_eq(T.gamma, list(sw.unit))
    pair = twist_hopf(sw, T)
    assert pair.twisted.same_tensors(sw)
    rep = invariance_report(sw, T, pair=pair)
    assert rep.clean


def test_twist_not_invertible_rejected(zoo_algebras):
    sw = zoo_algebras["sweedler"]
    F = [sw.zero_c] * 16
    F[0 * 4 + 2] = sw.one_c  # 1 (x) x, nilpotent
    with pytest.raises(TwistValidationError) as err:
        validate_twist(sw, F)
    assert err.value.reason == "not_invertible"


def test_twist_normalization_rejected(zoo_algebras):
    sw = zoo_algebras["sweedler"]
    F = [sw.zero_c] * 16
    F[0] = sw.one_c          # 1 (x) 1
    F[2 * 4 + 0] = sw.one_c  # x (x) 1 breaks (eps (x) id)F = 1
    with pytest.raises(TwistValidationError) as err:
        validate_twist(sw, F)
    assert err.value.reason == "counit_normalization"


def test_twist_cocycle_rejected(zoo_algebras):
    # invertible, normalized, but not a cocycle: 1 (x) 1 + x (x) x on Sweedler
    sw = zoo_algebras["sweedler"]
    F = [sw.zero_c] * 16
    F[0] = sw.one_c
    F[2 * 4 + 2] = sw.one_c
    with pytest.raises(TwistValidationError) as err:
        validate_twist(sw, F)
    assert err.value.reason == "cocycle"


def test_commutative_base_twists_to_itself(zoo_algebras):
    z4 = zoo_algebras["z4"]
    F = zoo.bicharacter_twist(z4, z4.basis_vec(1), 4, 1)
    T = validate_twist(z4, F)
    pair = twist_hopf(z4, T)
    assert pair.twisted.same_tensors(pair.base)
    # beta may still be a nontrivial element
    assert not vec_eq(T.beta, list(pair.base.unit))


def test_sweedler_twist_changes_coproduct(chevalley_twists):
    H, T, pair = chevalley_twists["sweedler-c1"]
    assert vec_eq(T.beta, H.basis_vec(1))  # beta = g
    assert not pair.twisted.same_tensors(pair.base)
    assert verify_hopf(pair.twisted).ok


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_twisted_square_antipode_is_gamma_conjugation(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    base, tw = pair.base, pair.twisted
    S_F2 = tw.antipode_sq
    conj = base.lmat(T.gamma) @ base.rmat(T.gamma_inv) @ base.antipode_sq
    assert S_F2 == conj


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_higher_twisted_powers_follow_gamma_products(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    base, tw = pair.base, pair.twisted
    for k in (1, 2, 3):
        gk = gamma_power(T, base, k)
        gk_inv = base.element_inverse(gk)
        lhs = tw.antipode_sq ** k
        rhs = base.lmat(gk) @ base.rmat(gk_inv) @ (base.antipode_sq ** k)
        assert lhs == rhs


def test_gamma_power_base_case(chevalley_twists):
    H, T, _ = chevalley_twists["taft-3-c1"]
    assert vec_eq(gamma_power(T, H, 1), T.gamma)
    with pytest.raises(ValueError):
        gamma_power(T, H, 0)


def test_grouplike_check_basics(zoo_algebras):
    z4 = zoo_algebras["z4"]
    assert grouplike_check(z4, list(z4.unit))
    for i in range(4):
        assert grouplike_check(z4, z4.basis_vec(i))
    sw = zoo_algebras["sweedler"]
    assert not grouplike_check(sw, sw.basis_vec(2))


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_gamma_power_is_grouplike_in_twisted_algebra(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    _, ord_s2 = ord_antipode(pair.base)
    assert grouplike_check(pair.twisted, gamma_power(T, pair.base, ord_s2))


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_gamma_coproduct_identity(label, chevalley_twists):
    H, T, _ = chevalley_twists[label]
    assert gamma_coproduct_check(H, T)


def test_gamma_coproduct_identity_fails_for_mutated_gamma(chevalley_twists):
    H, T, _ = chevalley_twists["sweedler-c1"]
    base = H.lift(T.conductor)
    bad = list(T.gamma)
    bad[2] = bad[2] + 1  # shift by the radical element x
    assert not gamma_coproduct_check(H, T, gamma=bad)


def test_beta_fixed_identity_twist(zoo_algebras):
    sw = zoo_algebras["sweedler"]
    res = beta_fixed_check(sw, identity_twist(sw))
    assert res.antipode_fixes_beta and res.difference_in_radical


def test_invariance_report_defaults(chevalley_twists):
    H, T, pair = chevalley_twists["sweedler-c1"]
    rep = invariance_report(H, T, pair=pair)
    ord_s, _ = ord_antipode(pair.base)
    assert min(rep.base_table.trace_powers) == -2 * ord_s
    assert max(rep.base_table.trace_powers) == 2 * ord_s
    assert max(rep.base_table.kmn) == 12
    assert rep.clean


def test_double_twist_returns_to_base(chevalley_twists):
    H, T, pair = chevalley_twists["sweedler-c1"]
    back_T = validate_twist(pair.twisted, T.F_inv)
    back = twist_hopf(pair.twisted, back_T)
    assert back.twisted.same_tensors(pair.base)


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_sigma_power_is_right_multiplication(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    base = pair.base
    _, ord_s2 = ord_antipode(base)
    sigma = base.rmat(T.gamma_inv) @ base.antipode_sq
    gn = gamma_power(T, base, ord_s2)
    gn_inv = base.element_inverse(gn)
    assert sigma ** ord_s2 == base.rmat(gn_inv)


def test_regular_object_identity_twist(zoo_algebras):
    sw = zoo_algebras["sweedler"]
    res = regular_object_test(sw, identity_twist(sw), seed=0)
    assert res.status == "witness-found"
    assert res.witness is not None


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_regular_object_witness_on_chevalley_pairs(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    base = pair.base
    res = regular_object_test(base, T, seed=0)
    assert res.status == "witness-found"
    t = res.witness
    # substitution: S^2(t) gamma^-1 = t, and t is a unit
    assert vec_eq(base.mul(base.antipode_sq.apply(t), T.gamma_inv), t)
    assert base.element_inverse(t) is not None
    assert res.quotient_certified


def test_regular_object_reproducible(chevalley_twists):
    H, T, pair = chevalley_twists["taft-3-c1"]
    a = regular_object_test(pair.base, T, seed=5)
    b = regular_object_test(pair.base, T, seed=5)
    assert a.status == b.status
    assert vec_eq(a.witness, b.witness)


@pytest.mark.parametrize("label", [p[0] for p in CHEVALLEY_PAIRS])
def test_gamma_unity(label, chevalley_twists):
    H, T, pair = chevalley_twists[label]
    _, ord_s2 = ord_antipode(pair.base)
    assert gamma_unity_check(H, T, ord_s2)
    assert gamma_unity_check(H, T, 2 * ord_s2)
    with pytest.raises(ValueError):
        gamma_unity_check(H, T, ord_s2 + 1 if ord_s2 > 1 else 3)


def test_gamma_unity_rejects_non_multiples(chevalley_twists):
    H, T, _ = chevalley_twists["taft-3-c1"]
    with pytest.raises(ValueError):
        gamma_unity_check(H, T, 4)  # ord(S^2) = 3


def test_semisimple_beta_is_fixed(semisimple_twists):
    for label, (H, T) in semisimple_twists.items():
        res = beta_fixed_check(H, T)
        assert res.antipode_fixes_beta, label


def test_twist_report_flags_nonchevalley_nothing():
    # identity twist on kZ3 exercises the semisimple reporting path
    z3 = zoo.group_algebra(zoo.cyclic_group(3))
    T = identity_twist(z3)
    rep = invariance_report(z3, T)
    assert rep.clean
    chev = is_chevalley(z3)
    assert chev.radical.dim == 0
