"""Integrals, the trace formula, Jacobson radical, and the Chevalley
property with the quotient Hopf algebra H / J."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum
from .hopf import (
    HopfAlgebra,
    InvariantTable,
    antipode_power,
    kmn_indicator,
    ord_antipode,
    vec_is_zero,
    verify_hopf,
)
from .linalg import Mat, Tensor3, inverse, is_nilpotent, nullspace


@dataclass
class IntegralPair:
    """Left integral of H and right integral of H*, normalized so that the
    cointegral evaluates to 1 on the integral."""

    left_integral: list
    right_cointegral: list


def integrals(H: HopfAlgebra) -> IntegralPair:
    """Solve the two defining linear systems exactly.  Both solution spaces
    are one-dimensional for genuine Hopf algebras; anything else aborts
    loudly, since silently picking a vector would poison every downstream
    check."""
    d = H.dim
    rows = []
    for i in range(d):
        li = H.lmat(H.basis_vec(i))
        ei = H.counit[i]
        for r in range(d):
            row = list(li.entries[r])
            row[r] = row[r] - ei
            rows.append(row)
    lam_space = nullspace(Mat(rows, H.conductor))
    if len(lam_space) != 1:
        raise ValueError(
            f"left integral space has dimension {len(lam_space)}, expected 1"
        )
    big = lam_space[0]

    # right integral of the dual: sum lambda(h_1) h_2 = lambda(h) 1
    rows = []
    for i in range(d):
        cop_i = H.delta_basis(i)
        for k in range(d):
            row = [H.zero_c] * d
            for key, c in cop_i.items():
                j, kk = divmod(key, d)
                if kk == k:
                    row[j] = row[j] + c
            row[i] = row[i] - H.unit[k]
            rows.append(row)
    lam_star = nullspace(Mat(rows, H.conductor))
    if len(lam_star) != 1:
        raise ValueError(
            f"right cointegral space has dimension {len(lam_star)}, expected 1"
        )
    lam = lam_star[0]
    pairing = H.zero_c
    for lk, bk in zip(lam, big):
        pairing = pairing + lk * bk
    if pairing.is_zero():
        raise ValueError("degenerate integral pairing; structure tensors corrupt")
    inv = pairing.inverse()
    lam = [lk * inv for lk in lam]
    return IntegralPair(big, lam)


def radford_trace(H: HopfAlgebra, T: Mat, pair: IntegralPair | None = None) -> CycNum:
    """Trace of a linear endomorphism computed through the integral pair:
    evaluate the cointegral on S(Lambda_2) T(Lambda_1).  Agrees exactly with
    the matrix trace."""
    if pair is None:
        pair = integrals(H)
    d = H.dim
    S = H.antipode
    total = H.zero_c
    for key, c in H.delta(pair.left_integral).items():
        u, v = divmod(key, d)
        w = H.mul(S.column(v), T.column(u))
        val = H.zero_c
        for lk, wk in zip(pair.right_cointegral, w):
            if not (lk.is_zero() or wk.is_zero()):
                val = val + lk * wk
        total = total + c * val
    return total


def integral_identity_check(H: HopfAlgebra, pair: IntegralPair | None = None) -> bool:
    """Exact check of Lambda_1 (x) a Lambda_2 = S(a) Lambda_1 (x) Lambda_2
    for every basis element a."""
    if pair is None:
        pair = integrals(H)
    d = H.dim
    DL = H.delta(pair.left_integral)
    for a in range(d):
        s_col = H.antipode.column(a)
        lhs: dict = {}
        rhs: dict = {}
        for key, c in DL.items():
            u, v = divmod(key, d)
            for k, m in H._pairs.get((a, v), ()):
                kk = u * d + k
                lhs[kk] = lhs.get(kk, H.zero_c) + c * m
            w = H.mul(s_col, H.basis_vec(u))
            for t, wt in enumerate(w):
                if not wt.is_zero():
                    kk = t * d + v
                    rhs[kk] = rhs.get(kk, H.zero_c) + c * wt
        from .hopf import sparse_eq

        if not sparse_eq(lhs, rhs):
            return False
    return True


# -- Jacobson radical -----------------------------------------------------------


@dataclass
class RadicalData:
    """Radical basis, the projection onto the chosen complement, and the
    section realizing the quotient basis inside H."""

    radical_basis: list
    projection: Mat
    section: Mat
    quotient: HopfAlgebra | None = None

    @property
    def dim(self) -> int:
        return len(self.radical_basis)


def jacobson_radical(H: HopfAlgebra) -> RadicalData:
    """Radical as the nullspace of the trace form G_ij = Tr(l(b_i b_j))
    (valid in characteristic zero); the ideal and nilpotency properties are
    verified before returning."""
    d = H.dim
    # trace of left multiplication by each basis element
    tvec = [H.zero_c] * d
    for t in range(d):
        s = H.zero_c
        for k in range(d):
            for kk, c in H._pairs.get((t, k), ()):
                if kk == k:
                    s = s + c
        tvec[t] = s
    gram = [[H.zero_c] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            s = H.zero_c
            for k, c in H._pairs.get((i, j), ()):
                if not tvec[k].is_zero():
                    s = s + c * tvec[k]
            gram[i][j] = s
    rad = nullspace(Mat(gram, H.conductor))

    # greedy extension of the radical basis by lowest-index unit vectors
    basis_cols = [list(v) for v in rad]
    rref_rows: list = []
    for v in basis_cols:
        _absorb(rref_rows, list(v))
    chosen = []
    for i in range(d):
        e = H.basis_vec(i)
        if _absorb(rref_rows, list(e)):
            chosen.append(i)
    if len(basis_cols) + len(chosen) != d:
        raise RuntimeError("radical basis extension failed")
    M = Mat.from_columns(
        basis_cols + [H.basis_vec(i) for i in chosen], d, H.conductor
    )
    Minv = inverse(M)
    r = len(basis_cols)
    projection = Mat(Minv.entries[r:], H.conductor) if r < d else Mat(
        [[H.zero_c] * d for _ in range(0)], H.conductor
    )
    if r == d:
        raise RuntimeError("radical cannot be the whole algebra")
    section = Mat.from_columns(
        [H.basis_vec(i) for i in chosen], d, H.conductor
    )
    data = RadicalData(rad, projection, section)
    _verify_radical(H, data)
    return data


def _absorb(rref_rows: list, v: list) -> bool:
    """Reduce v against the accumulated rows; add and return True when it is
    independent."""
    for piv, row in rref_rows:
        c = v[piv]
        if not c.is_zero():
            v = [x - c * y for x, y in zip(v, row)]
    piv = next((i for i, x in enumerate(v) if not x.is_zero()), None)
    if piv is None:
        return False
    inv = v[piv].inverse()
    rref_rows.append((piv, [x * inv for x in v]))
    return True


def _verify_radical(H: HopfAlgebra, data: RadicalData) -> None:
    pi = data.projection
    for v in data.radical_basis:
        for i in range(H.dim):
            if not vec_is_zero(pi.apply(H.mul(H.basis_vec(i), v))):
                raise RuntimeError("radical not a left ideal; arithmetic bug")
            if not vec_is_zero(pi.apply(H.mul(v, H.basis_vec(i)))):
                raise RuntimeError("radical not a right ideal; arithmetic bug")
        if not is_nilpotent(H.lmat(v)):
            raise RuntimeError("radical element not nilpotent; arithmetic bug")
    # the quotient algebra must be semisimple: nondegenerate trace form
    qd = H.dim - data.dim
    sec = data.section
    tbar = [[H.zero_c] * qd for _ in range(qd)]
    for a in range(qd):
        for b in range(qd):
            w = H.mul(sec.column(a), sec.column(b))
            # trace of left multiplication on the quotient
            s = H.zero_c
            for cidx in range(qd):
                img = pi.apply(H.mul(w, sec.column(cidx)))
                s = s + img[cidx]
            tbar[a][b] = s
    if nullspace(Mat(tbar, H.conductor)):
        raise RuntimeError("quotient trace form degenerate; arithmetic bug")


def radical_contains(data: RadicalData, v: list) -> bool:
    return vec_is_zero(data.projection.apply(v))


# -- Chevalley property ------------------------------------------------------------


@dataclass
class ChevalleyResult:
    chevalley: bool
    witness: str | None
    quotient: HopfAlgebra | None
    radical: RadicalData


def is_chevalley(H: HopfAlgebra, radical: RadicalData | None = None) -> ChevalleyResult:
    """Decide whether the radical is a Hopf ideal; on success construct the
    quotient Hopf algebra and verify it."""
    rad = radical if radical is not None else jacobson_radical(H)
    if rad.dim == 0:
        rad.quotient = H
        return ChevalleyResult(True, None, H, rad)
    pi = rad.projection
    d = H.dim
    for idx, v in enumerate(rad.radical_basis):
        if not H.eps(v).is_zero():
            return ChevalleyResult(False, f"counit nonzero on radical vector {idx}", None, rad)
        if not vec_is_zero(pi.apply(H.antipode.apply(v))):
            return ChevalleyResult(False, f"antipode leaves radical at vector {idx}", None, rad)
        # Delta(v) must die under (pi (x) pi), whose kernel is J(x)H + H(x)J
        acc: dict = {}
        for key, c in H.delta(v).items():
            u, w = divmod(key, d)
            pu = pi.column(u)
            pw = pi.column(w)
            for a, pa in enumerate(pu):
                if pa.is_zero():
                    continue
                ca = c * pa
                for b, pb in enumerate(pw):
                    if not pb.is_zero():
                        kk = (a, b)
                        acc[kk] = acc.get(kk, H.zero_c) + ca * pb
        if any(not x.is_zero() for x in acc.values()):
            return ChevalleyResult(
                False, f"comultiplication leaves radical at vector {idx}", None, rad
            )
    quotient = _quotient_hopf(H, rad)
    report = verify_hopf(quotient)
    if not report.ok:
        raise RuntimeError(
            f"quotient failed Hopf verification: {report.failures()}; arithmetic bug"
        )
    rad.quotient = quotient
    return ChevalleyResult(True, None, quotient, rad)


def _quotient_hopf(H: HopfAlgebra, rad: RadicalData) -> HopfAlgebra:
    pi, sec = rad.projection, rad.section
    qd = H.dim - rad.dim
    d = H.dim
    mult: dict = {}
    for a in range(qd):
        for b in range(qd):
            img = pi.apply(H.mul(sec.column(a), sec.column(b)))
            for k, c in enumerate(img):
                if not c.is_zero():
                    mult[(a, b, k)] = c
    comult: dict = {}
    for a in range(qd):
        for key, c in H.delta(sec.column(a)).items():
            u, w = divmod(key, d)
            pu, pw = pi.column(u), pi.column(w)
            for i, x in enumerate(pu):
                if x.is_zero():
                    continue
                cx = c * x
                for j, y in enumerate(pw):
                    if not y.is_zero():
                        kk = (a, i, j)
                        comult[kk] = comult.get(kk, H.zero_c) + cx * y
    unit = tuple(pi.apply(list(H.unit)))
    counit = tuple(H.eps(sec.column(a)) for a in range(qd))
    antipode = pi @ H.antipode @ sec
    return HopfAlgebra(
        qd,
        Tensor3.from_dict(qd, mult, H.conductor),
        unit,
        Tensor3.from_dict(qd, comult, H.conductor),
        counit,
        antipode,
    )


def nilpotent_composite_check(
    H: HopfAlgebra,
    x: list,
    a: list,
    T: Mat,
    side: str,
    radical: RadicalData | None = None,
) -> bool:
    """Nilpotency of l(x) r(a) T (side 'left') or l(a) r(x) T (side 'right')
    for x in the radical and T an algebra (anti)endomorphism matrix."""
    rad = radical if radical is not None else jacobson_radical(H)
    if not radical_contains(rad, x):
        raise ValueError("x is not in the Jacobson radical")
    if side == "left":
        comp = H.lmat(x) @ H.rmat(a) @ T
    elif side == "right":
        comp = H.lmat(a) @ H.rmat(x) @ T
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return is_nilpotent(comp)


# -- invariant table -----------------------------------------------------------------


def invariant_table(
    H: HopfAlgebra,
    trace_range: tuple[int, int] | None = None,
    kmn_max: int = 12,
    chevalley: ChevalleyResult | None = None,
) -> InvariantTable:
    """Tabulate Tr(S^n), the regular-representation indicators, antipode
    orders, and the semisimplicity / Chevalley flags."""
    ord_s, ord_s2 = ord_antipode(H)
    if trace_range is None:
        trace_range = (-2 * ord_s, 2 * ord_s)
    lo, hi = trace_range
    if lo > hi:
        raise ValueError("empty trace range")
    traces: dict = {}
    acc = antipode_power(H, lo)
    traces[lo] = acc.trace()
    for n in range(lo + 1, hi + 1):
        acc = acc @ H.antipode
        traces[n] = acc.trace()
    kmn = {n: kmn_indicator(H, n) for n in range(kmn_max + 1)}
    chev = chevalley if chevalley is not None else is_chevalley(H)
    return InvariantTable(
        dim=H.dim,
        trace_powers=traces,
        kmn=kmn,
        ord_s=ord_s,
        ord_s2=ord_s2,
        semisimple=chev.radical.dim == 0,
        chevalley=chev.chevalley,
    )
