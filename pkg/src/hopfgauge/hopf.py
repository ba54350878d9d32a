"""Finite-dimensional Hopf algebras as exact structure tensors.

Conventions, fixed once for the whole package:

* elements of H are dense coordinate lists over the basis b_0 .. b_{d-1};
* mult(i, j, k) is the coefficient of b_k in b_i * b_j;
* comult(i, j, k) is the coefficient of b_j (x) b_k in Delta(b_i), the
  left tensor factor listed first;
* matrices act on column coordinate vectors, column i = image of b_i;
* elements of H (x) H and H (x) H (x) H are sparse dicts keyed by the flat
  Kronecker index i*d + j, respectively (i*d + j)*d + k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cyclotomic import CycNum, lcm
from .linalg import Mat, SingularMatrixError, Tensor3, inverse


@dataclass(eq=False)
class HopfAlgebra:
    """Dimension plus the five structure tensors.  Immutable by convention;
    all operations are pure functions of the data."""

    dim: int
    mult: Tensor3
    unit: tuple
    comult: Tensor3
    counit: tuple
    antipode: Mat
    conductor: int = field(init=False)

    def __post_init__(self):
        d = self.dim
        if self.mult.d != d or self.comult.d != d:
            raise ValueError("tensor dimension mismatch")
        if len(self.unit) != d or len(self.counit) != d:
            raise ValueError("unit/counit length mismatch")
        if self.antipode.rows != d or self.antipode.cols != d:
            raise ValueError("antipode shape mismatch")
        n = lcm(self.mult.conductor, self.comult.conductor)
        n = lcm(n, self.antipode.conductor)
        for v in list(self.unit) + list(self.counit):
            n = lcm(n, v.conductor)
        self.conductor = n
        self.mult = self.mult.lift(n)
        self.comult = self.comult.lift(n)
        self.antipode = self.antipode.lift(n)
        self.unit = tuple(v.lift(n) for v in self.unit)
        self.counit = tuple(v.lift(n) for v in self.counit)

    # -- cached sparse views ----------------------------------------------

    @cached_property
    def _pairs(self):
        """(i, j) -> tuple of (k, coeff) with b_i b_j = sum coeff b_k."""
        d = self.dim
        out = {}
        for flat, e in enumerate(self.mult.entries):
            if not e.is_zero():
                ij, k = divmod(flat, d)
                out.setdefault(divmod(ij, d), []).append((k, e))
        return {key: tuple(v) for key, v in out.items()}

    @cached_property
    def _cop(self):
        """Per-basis nonzero comultiplication terms (j, k, coeff)."""
        return self.comult.slices()

    @cached_property
    def zero_c(self) -> CycNum:
        return CycNum.zero(self.conductor)

    @cached_property
    def one_c(self) -> CycNum:
        return CycNum.one(self.conductor)

    @cached_property
    def identity_mat(self) -> Mat:
        return Mat.identity(self.dim, self.conductor)

    @cached_property
    def antipode_inv(self) -> Mat:
        return inverse(self.antipode)

    @cached_property
    def antipode_sq(self) -> Mat:
        return self.antipode @ self.antipode

    # -- element helpers ---------------------------------------------------

    def zero_vec(self):
        return [self.zero_c] * self.dim

    def basis_vec(self, i: int):
        v = self.zero_vec()
        v[i] = self.one_c
        return v

    def scalar_vec(self, c):
        if not isinstance(c, CycNum):
            c = CycNum.from_rational(c, self.conductor)
        return [c * u for u in self.unit]

    def mul(self, u, v):
        """Product of two dense element vectors."""
        out = self.zero_vec()
        pairs = self._pairs
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                c = ui * vj
                for k, m in pairs.get((i, j), ()):
                    out[k] = out[k] + c * m
        return out

    def mul_basis(self, i: int, j: int):
        out = self.zero_vec()
        for k, m in self._pairs.get((i, j), ()):
            out[k] = m
        return out

    def eps(self, u) -> CycNum:
        t = self.zero_c
        for ui, ei in zip(u, self.counit):
            if not (ui.is_zero() or ei.is_zero()):
                t = t + ui * ei
        return t

    def element_power(self, u, k: int):
        out = list(self.unit)
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def element_inverse(self, u):
        """Inverse of u in H, or None when u is not a unit."""
        from .linalg import solve

        sol = solve(self.lmat(u), list(self.unit))
        if sol is None or sol.nullspace:
            return None
        return sol.particular

    def lmat(self, u) -> Mat:
        """Matrix of left multiplication by u."""
        cols = [self.mul(u, self.basis_vec(j)) for j in range(self.dim)]
        return Mat.from_columns(cols, self.dim, self.conductor)

    def rmat(self, u) -> Mat:
        """Matrix of right multiplication by u."""
        cols = [self.mul(self.basis_vec(j), u) for j in range(self.dim)]
        return Mat.from_columns(cols, self.dim, self.conductor)

    # -- tensor square / cube helpers ---------------------------------------

    def tensor2(self, u, v):
        d = self.dim
        out = {}
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    out[i * d + j] = ui * vj
        return out

    def unit_tensor2(self):
        return self.tensor2(list(self.unit), list(self.unit))

    def delta(self, u):
        """Delta(u) as a sparse 2-tensor."""
        d = self.dim
        out = {}
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, k, c in self._cop[i]:
                key = j * d + k
                s = out.get(key)
                t = ui * c if s is None else s + ui * c
                out[key] = t
        return _drop_zeros(out)

    def delta_basis(self, i: int):
        d = self.dim
        return {j * d + k: c for j, k, c in self._cop[i]}

    def mul2(self, U, V):
        """Product in H (x) H of two sparse 2-tensors."""
        d = self.dim
        pairs = self._pairs
        out = {}
        for ku, cu in U.items():
            i1, i2 = divmod(ku, d)
            for kv, cv in V.items():
                j1, j2 = divmod(kv, d)
                left = pairs.get((i1, j1))
                if not left:
                    continue
                right = pairs.get((i2, j2))
                if not right:
                    continue
                c = cu * cv
                for k1, m1 in left:
                    cm = c * m1
                    for k2, m2 in right:
                        key = k1 * d + k2
                        s = out.get(key)
                        t = cm * m2 if s is None else s + cm * m2
                        out[key] = t
        return _drop_zeros(out)

    def mul3(self, U, V):
        """Product in H (x) H (x) H of two sparse 3-tensors."""
        d = self.dim
        pairs = self._pairs
        out = {}
        for ku, cu in U.items():
            iu, i3 = divmod(ku, d)
            i1, i2 = divmod(iu, d)
            for kv, cv in V.items():
                jv, j3 = divmod(kv, d)
                j1, j2 = divmod(jv, d)
                p1 = pairs.get((i1, j1))
                if not p1:
                    continue
                p2 = pairs.get((i2, j2))
                if not p2:
                    continue
                p3 = pairs.get((i3, j3))
                if not p3:
                    continue
                c = cu * cv
                for k1, m1 in p1:
                    c1 = c * m1
                    for k2, m2 in p2:
                        c2 = c1 * m2
                        for k3, m3 in p3:
                            key = (k1 * d + k2) * d + k3
                            s = out.get(key)
                            t = c2 * m3 if s is None else s + c2 * m3
                            out[key] = t
        return _drop_zeros(out)

    def cop_first(self, U):
        """(Delta (x) id) applied to a sparse 2-tensor."""
        d = self.dim
        out = {}
        for key, c in U.items():
            i, t = divmod(key, d)
            for j, k, m in self._cop[i]:
                kk = (j * d + k) * d + t
                s = out.get(kk)
                v = c * m if s is None else s + c * m
                out[kk] = v
        return _drop_zeros(out)

    def cop_second(self, U):
        """(id (x) Delta) applied to a sparse 2-tensor."""
        d = self.dim
        out = {}
        for key, c in U.items():
            t, i = divmod(key, d)
            for j, k, m in self._cop[i]:
                kk = (t * d + j) * d + k
                s = out.get(kk)
                v = c * m if s is None else s + c * m
                out[kk] = v
        return _drop_zeros(out)

    def eps_first(self, U):
        """(eps (x) id) applied to a sparse 2-tensor, as a dense vector."""
        d = self.dim
        out = self.zero_vec()
        for key, c in U.items():
            i, j = divmod(key, d)
            e = self.counit[i]
            if not e.is_zero():
                out[j] = out[j] + e * c
        return out

    def eps_second(self, U):
        d = self.dim
        out = self.zero_vec()
        for key, c in U.items():
            i, j = divmod(key, d)
            e = self.counit[j]
            if not e.is_zero():
                out[i] = out[i] + e * c
        return out

    def embed2(self, u, U):
        """u (x) U for a dense vector u and sparse 2-tensor U."""
        d = self.dim
        out = {}
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for key, c in U.items():
                out[i * d * d + key] = ui * c
        return out

    def embed2_right(self, U, u):
        """U (x) u for a sparse 2-tensor U and dense vector u."""
        d = self.dim
        out = {}
        for key, c in U.items():
            for i, ui in enumerate(u):
                if not ui.is_zero():
                    out[key * d + i] = c * ui
        return out

    def comult_matrix(self) -> Mat:
        """Delta as a d^2 x d matrix under the flat index convention."""
        d = self.dim
        zero = self.zero_c
        out = [[zero] * d for _ in range(d * d)]
        for i in range(d):
            for j, k, c in self._cop[i]:
                out[j * d + k][i] = c
        return Mat(out, self.conductor)

    # -- misc ----------------------------------------------------------------

    def lift(self, conductor: int) -> "HopfAlgebra":
        if conductor == self.conductor:
            return self
        return HopfAlgebra(
            self.dim,
            self.mult.lift(conductor),
            tuple(v.lift(conductor) for v in self.unit),
            self.comult.lift(conductor),
            tuple(v.lift(conductor) for v in self.counit),
            self.antipode.lift(conductor),
        )

    def same_tensors(self, other: "HopfAlgebra") -> bool:
        """Entrywise equality of all structure tensors (conductor-blind)."""
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.comult == other.comult
            and self.antipode == other.antipode
            and all(x == y for x, y in zip(self.unit, other.unit))
            and all(x == y for x, y in zip(self.counit, other.counit))
        )


def _drop_zeros(sparse: dict) -> dict:
    return {k: v for k, v in sparse.items() if not v.is_zero()}


def sparse_eq(U: dict, V: dict) -> bool:
    U = _drop_zeros(U)
    V = _drop_zeros(V)
    if set(U) != set(V):
        return False
    return all(U[k] == V[k] for k in U)


def vec_eq(u, v) -> bool:
    return len(u) == len(v) and all(x == y for x, y in zip(u, v))


def vec_is_zero(u) -> bool:
    return all(x.is_zero() for x in u)


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


# -- axiom verification -------------------------------------------------------

AXIOM_NAMES = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "bialgebra",
    "antipode",
    "antipode_invertible",
)


@dataclass
class AxiomCheck:
    passed: bool
    first_failure: tuple | None = None


@dataclass
class AxiomReport:
    checks: dict

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self):
        return [name for name, c in self.checks.items() if not c.passed]


def verify_hopf(H: HopfAlgebra) -> AxiomReport:
    """Exact verification of all Hopf axioms; per axiom, the first failing
    index tuple is recorded to ease debugging of hand-entered tensors."""
    checks = {
        "associativity": _check_assoc(H),
        "unit": _check_unit(H),
        "coassociativity": _check_coassoc(H),
        "counit": _check_counit(H),
        "bialgebra": _check_bialgebra(H),
        "antipode": _check_antipode(H),
        "antipode_invertible": _check_antipode_invertible(H),
    }
    return AxiomReport(checks)


def _check_assoc(H: HopfAlgebra) -> AxiomCheck:
    d = H.dim
    pairs = H._pairs
    for i in range(d):
        for j in range(d):
            ij = pairs.get((i, j), ())
            for l in range(d):
                left = {}
                for k, c in ij:
                    for p, c2 in pairs.get((k, l), ()):
                        left[p] = left.get(p, H.zero_c) + c * c2
                right = {}
                for k, c in pairs.get((j, l), ()):
                    for p, c2 in pairs.get((i, k), ()):
                        right[p] = right.get(p, H.zero_c) + c * c2
                if not sparse_eq(left, right):
                    return AxiomCheck(False, (i, j, l))
    return AxiomCheck(True)


def _check_unit(H: HopfAlgebra) -> AxiomCheck:
    u = list(H.unit)
    for i in range(H.dim):
        e = H.basis_vec(i)
        if not vec_eq(H.mul(u, e), e):
            return AxiomCheck(False, (i, 0))
        if not vec_eq(H.mul(e, u), e):
            return AxiomCheck(False, (i, 1))
    return AxiomCheck(True)


def _check_coassoc(H: HopfAlgebra) -> AxiomCheck:
    for i in range(H.dim):
        U = H.delta_basis(i)
        if not sparse_eq(H.cop_first(U), H.cop_second(U)):
            return AxiomCheck(False, (i,))
    return AxiomCheck(True)


def _check_counit(H: HopfAlgebra) -> AxiomCheck:
    for i in range(H.dim):
        e = H.basis_vec(i)
        U = H.delta_basis(i)
        if not vec_eq(H.eps_first(U), e):
            return AxiomCheck(False, (i, 0))
        if not vec_eq(H.eps_second(U), e):
            return AxiomCheck(False, (i, 1))
    return AxiomCheck(True)


def _check_bialgebra(H: HopfAlgebra) -> AxiomCheck:
    d = H.dim
    if not sparse_eq(H.delta(list(H.unit)), H.unit_tensor2()):
        return AxiomCheck(False, (-1, -1))
    if H.eps(list(H.unit)) != H.one_c:
        return AxiomCheck(False, (-1, -2))
    for i in range(d):
        Ui = H.delta_basis(i)
        for j in range(d):
            prod = {}
            for k, c in H._pairs.get((i, j), ()):
                for key, m in H.delta_basis(k).items():
                    prod[key] = prod.get(key, H.zero_c) + c * m
            if not sparse_eq(prod, H.mul2(Ui, H.delta_basis(j))):
                return AxiomCheck(False, (i, j))
            lhs = H.zero_c
            for k, c in H._pairs.get((i, j), ()):
                lhs = lhs + c * H.counit[k]
            if lhs != H.counit[i] * H.counit[j]:
                return AxiomCheck(False, (i, j))
    return AxiomCheck(True)


def _check_antipode(H: HopfAlgebra) -> AxiomCheck:
    S = H.antipode
    for i in range(H.dim):
        target = H.scalar_vec(H.counit[i])
        left = H.zero_vec()
        right = H.zero_vec()
        for j, k, c in H._cop[i]:
            sj = H.mul(S.column(j), H.basis_vec(k))
            left = [x + c * y for x, y in zip(left, sj)]
            sk = H.mul(H.basis_vec(j), S.column(k))
            right = [x + c * y for x, y in zip(right, sk)]
        if not vec_eq(left, target):
            return AxiomCheck(False, (i, 0))
        if not vec_eq(right, target):
            return AxiomCheck(False, (i, 1))
    return AxiomCheck(True)


def _check_antipode_invertible(H: HopfAlgebra) -> AxiomCheck:
    try:
        H.antipode_inv  # noqa: B018 - cached property, raises when singular
    except SingularMatrixError:
        return AxiomCheck(False, (0,))
    return AxiomCheck(True)


# -- antipode powers, convolution powers, indicators --------------------------


def antipode_power(H: HopfAlgebra, n: int) -> Mat:
    """S^n as a matrix; S^0 is the identity, negative n uses S^-1."""
    base = H.antipode if n >= 0 else H.antipode_inv
    out = H.identity_mat
    for _ in range(abs(n)):
        out = out @ base
    return out


def trace_antipode_power(H: HopfAlgebra, n: int) -> CycNum:
    return antipode_power(H, n).trace()


def convolution_power(H: HopfAlgebra, k: int) -> Mat:
    """k-th convolution power of the identity: P_0 = unit o eps,
    P_1 = id, P_k = m o (id (x) P_{k-1}) o Delta."""
    if k < 0:
        raise ValueError("convolution power only defined for k >= 0")
    cols = [H.scalar_vec(H.counit[i]) for i in range(H.dim)]
    P = Mat.from_columns(cols, H.dim, H.conductor)
    for _ in range(k):
        P = _convolve_with_identity(H, P)
    return P


def _convolve_with_identity(H: HopfAlgebra, P: Mat) -> Mat:
    cols = []
    for i in range(H.dim):
        acc = H.zero_vec()
        for j, k, c in H._cop[i]:
            w = H.mul(H.basis_vec(j), P.column(k))
            acc = [x + c * y for x, y in zip(acc, w)]
        cols.append(acc)
    return Mat.from_columns(cols, H.dim, H.conductor)


def kmn_indicator(H: HopfAlgebra, n: int) -> CycNum:
    """Indicator of the regular representation: Tr(S o P_{n-1}) for n >= 1
    and Tr(S^2) for n = 0."""
    if n < 0:
        raise ValueError("indicator index must be >= 0")
    if n == 0:
        return trace_antipode_power(H, 2)
    return _trace_product(H.antipode, convolution_power(H, n - 1))


def _trace_product(A: Mat, B: Mat) -> CycNum:
    t = CycNum.zero(A.conductor)
    for i in range(A.rows):
        for k in range(A.cols):
            a = A.entries[i][k]
            if not a.is_zero():
                b = B.entries[k][i]
                if not b.is_zero():
                    t = t + a * b
    return t


def ord_antipode(H: HopfAlgebra, cap: int | None = None) -> tuple[int, int]:
    """(ord(S), ord(S^2)); raises when the hard iteration cap is exceeded,
    which signals invalid input."""
    if cap is None:
        cap = 4 * H.dim * H.dim
    ord_s = _matrix_order(H.antipode, H.identity_mat, cap)
    ord_s2 = _matrix_order(H.antipode_sq, H.identity_mat, cap)
    return ord_s, ord_s2


def _matrix_order(M: Mat, ident: Mat, cap: int) -> int:
    acc = M
    for m in range(1, cap + 1):
        if acc == ident:
            return m
        acc = acc @ M
    raise ValueError(f"no finite order within cap {cap}; input is not a Hopf algebra")


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """Structural dual: multiplication and comultiplication transpose,
    unit and counit swap, antipode transposes."""
    d = H.dim
    mult = {}
    for i in range(d):
        for j, k, c in H._cop[i]:
            mult[(j, k, i)] = mult.get((j, k, i), H.zero_c) + c
    comult = {}
    for (i, j), terms in H._pairs.items():
        for k, c in terms:
            comult[(k, i, j)] = comult.get((k, i, j), H.zero_c) + c
    return HopfAlgebra(
        d,
        Tensor3.from_dict(d, mult, H.conductor),
        tuple(H.counit),
        Tensor3.from_dict(d, comult, H.conductor),
        tuple(H.unit),
        H.antipode.transpose(),
    )


# -- invariant table -----------------------------------------------------------


@dataclass
class InvariantTable:
    """Per-algebra report of the quantities preserved under twisting."""

    dim: int
    trace_powers: dict
    kmn: dict
    ord_s: int
    ord_s2: int
    semisimple: bool
    chevalley: bool
