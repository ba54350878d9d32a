"""Constructors for the concrete Hopf algebras and twists used throughout:
group algebras and their duals, the Sweedler and (generalized) Taft
families, abelian bicharacter twists, and the finite pivotalization smash
product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd

from .cyclotomic import CycNum, lcm
from .hopf import HopfAlgebra, ord_antipode, sparse_eq, vec_eq, verify_hopf
from .linalg import Mat, Tensor3, inverse


@dataclass
class GroupPresentation:
    """Finite group given by its Cayley table of indices."""

    order: int
    cayley: tuple
    identity: int
    inverse: tuple
    labels: tuple | None = None

    def __post_init__(self):
        m = self.order
        self.cayley = tuple(tuple(row) for row in self.cayley)
        self.inverse = tuple(self.inverse)
        if len(self.cayley) != m or any(len(r) != m for r in self.cayley):
            raise ValueError("Cayley table has wrong shape")
        if any(not 0 <= x < m for r in self.cayley for x in r):
            raise ValueError("Cayley table entry out of range")
        e = self.identity
        if any(self.cayley[e][i] != i or self.cayley[i][e] != i for i in range(m)):
            raise ValueError("identity row/column mismatch")
        for i in range(m):
            j = self.inverse[i]
            if self.cayley[i][j] != e or self.cayley[j][i] != e:
                raise ValueError(f"inverse of element {i} is wrong")
        for a in range(m):
            for b in range(m):
                for c in range(m):
                    if (
                        self.cayley[self.cayley[a][b]][c]
                        != self.cayley[a][self.cayley[b][c]]
                    ):
                        raise ValueError(f"associativity fails at {(a, b, c)}")

    @classmethod
    def from_table(cls, table, labels=None) -> "GroupPresentation":
        m = len(table)
        identity = None
        for e in range(m):
            if all(table[e][i] == i and table[i][e] == i for i in range(m)):
                identity = e
                break
        if identity is None:
            raise ValueError("Cayley table has no identity")
        inverse = []
        for i in range(m):
            j = next(
                (j for j in range(m) if table[i][j] == identity and table[j][i] == identity),
                None,
            )
            if j is None:
                raise ValueError(f"element {i} has no inverse")
            inverse.append(j)
        return cls(m, table, identity, inverse, tuple(labels) if labels else None)


def cyclic_group(m: int) -> GroupPresentation:
    if m < 1:
        raise ValueError("group order must be >= 1")
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    labels = tuple("e" if i == 0 else f"g^{i}" for i in range(m))
    return GroupPresentation.from_table(table, labels)


def symmetric_group(n: int) -> GroupPresentation:
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms
    ]
    labels = tuple("".join(map(str, p)) for p in perms)
    return GroupPresentation.from_table(table, labels)


def symmetric_group_perms(n: int) -> list[tuple]:
    return sorted(permutations(range(n)))


def permutation_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def group_algebra(G: GroupPresentation) -> HopfAlgebra:
    """kG with the grouplike coproduct and inversion antipode."""
    m = G.order
    one = CycNum.one(1)
    mult = {(i, j, G.cayley[i][j]): one for i in range(m) for j in range(m)}
    comult = {(i, i, i): one for i in range(m)}
    unit = [CycNum.zero(1)] * m
    unit[G.identity] = one
    counit = [one] * m
    zero = CycNum.zero(1)
    antipode = Mat(
        [[one if G.inverse[j] == i else zero for j in range(m)] for i in range(m)]
    )
    return HopfAlgebra(
        m,
        Tensor3.from_dict(m, mult),
        tuple(unit),
        Tensor3.from_dict(m, comult),
        tuple(counit),
        antipode,
    )


def dual_group_algebra(G: GroupPresentation) -> HopfAlgebra:
    from .hopf import dual_hopf

    return dual_hopf(group_algebra(G))


# -- Taft family -----------------------------------------------------------------


def generalized_taft(n: int, d: int, zeta_exp: int = 1) -> HopfAlgebra:
    """The pointed algebra on generators g (grouplike of order n*d) and x
    (nilpotent of order d) with g x = zeta x g for zeta a primitive d-th
    root of unity.  Dimension n * d^2.

    Basis monomials g^i x^j are ordered x-degree first: index j*(n*d) + i.
    The skew-primitive coproduct of x uses the companion grouplike g, the
    unique smallest choice compatible with x^d = 0; the construction is
    verified axiom by axiom and aborts on failure.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if gcd(zeta_exp % d, d) != 1:
        raise ValueError("zeta exponent must be coprime to d")
    N = n * d
    dim = N * d
    zeta = CycNum.zeta(d, zeta_exp)
    one = CycNum.one(d)
    zero = CycNum.zero(d)

    def idx(i: int, j: int) -> int:
        return j * N + i

    zpow = [zeta ** k for k in range(N * d + 1)]

    mult: dict = {}
    for i1 in range(N):
        for j1 in range(d):
            for i2 in range(N):
                for j2 in range(d):
                    if j1 + j2 >= d:
                        continue
                    # x^j1 g^i2 = zeta^(-j1*i2) g^i2 x^j1
                    c = zpow[(-j1 * i2) % d]
                    mult[(idx(i1, j1), idx(i2, j2), idx((i1 + i2) % N, j1 + j2))] = c
    pairs: dict = {}
    for (a, b, k), c in mult.items():
        pairs[(a, b)] = (k, c)

    def m2(U: dict, V: dict) -> dict:
        out: dict = {}
        for (a1, a2), cu in U.items():
            for (b1, b2), cv in V.items():
                p1 = pairs.get((a1, b1))
                p2 = pairs.get((a2, b2))
                if p1 is None or p2 is None:
                    continue
                key = (p1[0], p2[0])
                add = cu * cv * p1[1] * p2[1]
                prev = out.get(key)
                out[key] = add if prev is None else prev + add
        return {k: v for k, v in out.items() if not v.is_zero()}

    delta_g = {(idx(1, 0), idx(1, 0)): one}
    delta_x = {(idx(0, 1), idx(0, 0)): one, (idx(1, 0), idx(0, 1)): one}
    dg_pow = [{(idx(0, 0), idx(0, 0)): one}]
    for _ in range(N - 1):
        dg_pow.append(m2(dg_pow[-1], delta_g))
    dx_pow = [{(idx(0, 0), idx(0, 0)): one}]
    for _ in range(d - 1):
        dx_pow.append(m2(dx_pow[-1], delta_x))
    comult: dict = {}
    for i in range(N):
        for j in range(d):
            for (a, b), c in m2(dg_pow[i], dx_pow[j]).items():
                comult[(idx(i, j), a, b)] = c

    counit = [zero] * dim
    for i in range(N):
        counit[idx(i, 0)] = one

    # antipode on monomials: S(g^i x^j) = S(x)^j g^(-i), S(x) = -g^(-1) x
    def m1(u: dict, v: dict) -> dict:
        out: dict = {}
        for a, cu in u.items():
            for b, cv in v.items():
                p = pairs.get((a, b))
                if p is None:
                    continue
                add = cu * cv * p[1]
                prev = out.get(p[0])
                out[p[0]] = add if prev is None else prev + add
        return {k: v for k, v in out.items() if not v.is_zero()}

    sx = {idx((N - 1) % N, 1): -one}
    cols = []
    for flat in range(dim):
        j, i = divmod(flat, N)
        v = {idx((-i) % N, 0): one}
        for _ in range(j):
            v = m1(sx, v)
        col = [zero] * dim
        for k, c in v.items():
            col[k] = c
        cols.append(col)
    antipode = Mat.from_columns(cols, dim, d)

    unit = [zero] * dim
    unit[idx(0, 0)] = one
    H = HopfAlgebra(
        dim,
        Tensor3.from_dict(dim, mult, d),
        tuple(unit),
        Tensor3.from_dict(dim, comult, d),
        tuple(counit),
        antipode,
    )
    report = verify_hopf(H)
    if not report.ok:
        raise RuntimeError(
            f"generalized Taft construction failed axioms: {report.failures()}"
        )
    return H


def taft(n: int, zeta_exp: int = 1) -> HopfAlgebra:
    """Classical Taft algebra of dimension n^2."""
    return generalized_taft(1, n, zeta_exp)


def sweedler() -> HopfAlgebra:
    """The four-dimensional algebra with basis 1, g, x, gx; the smallest
    nonsemisimple Hopf algebra."""
    return generalized_taft(1, 2, 1)


# -- abelian bicharacter twists ------------------------------------------------------


def bicharacter_twist(H: HopfAlgebra, grouplike: list, m: int, c: int) -> list:
    """Raw twisting element on the cyclic grouplike subgroup generated by
    the given element of order m: F = sum zeta^(c*a*b) e_a (x) e_b over the
    character idempotents e_a.  Validate with validate_twist."""
    conductor = lcm(H.conductor, m)
    H = H.lift(conductor)
    g = [
        (v if isinstance(v, CycNum) else CycNum.from_rational(v, conductor)).lift(
            conductor
        )
        for v in grouplike
    ]
    if not sparse_eq(H.delta(g), H.tensor2(g, g)) or H.eps(g) != H.one_c:
        raise ValueError("generator is not grouplike")
    powers = [list(H.unit)]
    for _ in range(m):
        powers.append(H.mul(powers[-1], g))
    if not vec_eq(powers[m], list(H.unit)):
        raise ValueError(f"generator does not have order {m}")
    for k in range(1, m):
        if vec_eq(powers[k], list(H.unit)):
            raise ValueError(f"generator has order {k}, not {m}")
    zeta = CycNum.zeta(conductor, conductor // m)
    inv_m = CycNum.from_rational(Fraction(1, m), conductor)
    idem = []
    for a in range(m):
        v = H.zero_vec()
        for b in range(m):
            w = zeta ** ((-a * b) % m)
            v = [x + w * y for x, y in zip(v, powers[b])]
        idem.append([inv_m * x for x in v])
    d = H.dim
    F = [H.zero_c] * (d * d)
    for a in range(m):
        ea = idem[a]
        for b in range(m):
            eb = idem[b]
            w = zeta ** ((c * a * b) % m)
            for i, xi in enumerate(ea):
                if xi.is_zero():
                    continue
                wx = w * xi
                for j, yj in enumerate(eb):
                    if not yj.is_zero():
                        F[i * d + j] = F[i * d + j] + wx * yj
    return F


# -- finite pivotalization -----------------------------------------------------------


def pivotalization(H: HopfAlgebra, N: int) -> HopfAlgebra:
    """Smash product of H with Z/N, the adjoined grouplike generator acting
    by the squared antipode; N must be a multiple of ord(S^2)."""
    _, ord_s2 = ord_antipode(H)
    if N < 1 or N % ord_s2:
        raise ValueError(f"N must be a positive multiple of ord(S^2) = {ord_s2}")
    d = H.dim
    dim = d * N

    def idx(i: int, a: int) -> int:
        return i * N + a

    s2 = [H.identity_mat]
    for _ in range(N - 1):
        s2.append(s2[-1] @ H.antipode_sq)
    s2_inv = [H.identity_mat]
    if N > 1:
        s2i = inverse(H.antipode_sq)
        for _ in range(N - 1):
            s2_inv.append(s2_inv[-1] @ s2i)

    mult: dict = {}
    for i in range(d):
        for a in range(N):
            for j in range(d):
                w = H.mul(H.basis_vec(i), s2[a].column(j))
                for b in range(N):
                    t = (a + b) % N
                    for k, ck in enumerate(w):
                        if not ck.is_zero():
                            mult[(idx(i, a), idx(j, b), idx(k, t))] = ck
    comult: dict = {}
    for i in range(d):
        for j, k, cv in H._cop[i]:
            for a in range(N):
                comult[(idx(i, a), idx(j, a), idx(k, a))] = cv
    unit = [H.zero_c] * dim
    for i, u in enumerate(H.unit):
        unit[idx(i, 0)] = u
    counit = [H.zero_c] * dim
    for i in range(d):
        for a in range(N):
            counit[idx(i, a)] = H.counit[i]
    cols = []
    for flat in range(dim):
        i, a = divmod(flat, N)
        w = s2_inv[a].apply(H.antipode.column(i))
        col = [H.zero_c] * dim
        t = (N - a) % N
        for k, ck in enumerate(w):
            col[idx(k, t)] = ck
        cols.append(col)
    antipode = Mat.from_columns(cols, dim, H.conductor)
    return HopfAlgebra(
        dim,
        Tensor3.from_dict(dim, mult, H.conductor),
        tuple(unit),
        Tensor3.from_dict(dim, comult, H.conductor),
        tuple(counit),
        antipode,
    )
