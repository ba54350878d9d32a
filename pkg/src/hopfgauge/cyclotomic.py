"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

A CycNum is a polynomial in zeta_n with rational coefficients, kept in
canonical reduced form modulo the n-th cyclotomic polynomial Phi_n, so
equality of values is equality of coefficient vectors (after lifting to a
common conductor).  Everything is exact; no floating point is used
anywhere in this package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ParseError(ValueError):
    """Coefficient text does not match the grammar."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"conductor must be >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first, monic."""
    if n < 1:
        raise ValueError(f"conductor must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1  # x^n - 1
    poly = num
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """zeta_n^k in canonical form, for k = 0 .. max(n, 2*phi(n)-1) - 1."""
    phi = euler_phi(n)
    mod = cyclotomic_polynomial(n)
    top = tuple(Fraction(-c) for c in mod[:phi])  # z^phi == top
    limit = max(n, 2 * phi - 1)
    rows = [(_ONE,) + (_ZERO,) * (phi - 1)]
    for _ in range(1, limit):
        prev = rows[-1]
        cur = [_ZERO] + list(prev[: phi - 1])
        lead = prev[phi - 1]
        if lead:
            cur = [c + lead * t for c, t in zip(cur, top)]
        rows.append(tuple(cur))
    return tuple(rows)


class CycNum:
    """Element of Q(zeta_n), canonical modulo Phi_n.

    Immutable value; safe to share between workers.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(
            c if isinstance(c, Fraction) else Fraction(c) for c in coeffs
        )
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"need phi({conductor}) = {euler_phi(conductor)} coefficients, "
                f"got {len(coeffs)}"
            )
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycNum":
        return cls(conductor, (_ZERO,) * euler_phi(conductor))

    @classmethod
    def one(cls, conductor: int = 1) -> "CycNum":
        return cls.from_rational(_ONE, conductor)

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "CycNum":
        coeffs = [_ZERO] * euler_phi(conductor)
        coeffs[0] = Fraction(value)
        return cls(conductor, coeffs)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CycNum":
        return cls(conductor, _power_table(conductor)[power % conductor])

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, conductor: int) -> "CycNum":
        """Rewrite over Q(zeta_m) for a multiple m of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                f"cannot lift conductor {self.conductor} to {conductor}"
            )
        step = conductor // self.conductor
        table = _power_table(conductor)
        out = [_ZERO] * euler_phi(conductor)
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(k * step) % conductor]
                for i, t in enumerate(row):
                    if t:
                        out[i] += c * t
        return CycNum(conductor, out)

    def descend(self, conductor: int) -> "CycNum":
        """Rewrite over the subfield Q(zeta_m) for a divisor m; ValueError
        if the value does not lie there."""
        if self.conductor % conductor:
            raise ValueError(
                f"{conductor} does not divide conductor {self.conductor}"
            )
        if conductor == self.conductor:
            return self
        cols = [
            CycNum.zeta(conductor, j).lift(self.conductor).coeffs
            for j in range(euler_phi(conductor))
        ]
        # solve sum_j x_j cols[j] = coeffs by elimination over Q
        nrow, ncol = len(self.coeffs), len(cols)
        aug = [
            [cols[j][i] for j in range(ncol)] + [self.coeffs[i]]
            for i in range(nrow)
        ]
        pr = 0
        pivots = []
        for c in range(ncol):
            r = next((i for i in range(pr, nrow) if aug[i][c]), None)
            if r is None:
                continue
            aug[pr], aug[r] = aug[r], aug[pr]
            inv = 1 / aug[pr][c]
            aug[pr] = [e * inv for e in aug[pr]]
            for i in range(nrow):
                if i != pr and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[pr])]
            pivots.append(c)
            pr += 1
        if any(row[-1] for row in aug[pr:]):
            raise ValueError(f"{self} is not in Q(zeta_{conductor})")
        sol = [_ZERO] * ncol
        for r, c in enumerate(pivots):
            sol[c] = aug[r][-1]
        return CycNum(conductor, sol)

    def _common(self, other: "CycNum"):
        if self.conductor == other.conductor:
            return self, other
        n = lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    @staticmethod
    def _coerce(value, conductor: int):
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum.from_rational(value, conductor)
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CycNum(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CycNum(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        phi = len(a.coeffs)
        if phi == 1:
            return CycNum(a.conductor, (a.coeffs[0] * b.coeffs[0],))
        conv = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        table = _power_table(a.conductor)
        for k in range(phi, 2 * phi - 1):
            ck = conv[k]
            if ck:
                row = table[k]
                for i, t in enumerate(row):
                    if t:
                        out[i] += ck * t
        return CycNum(a.conductor, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_n)")
        n = self.conductor
        phi = len(self.coeffs)
        if phi == 1:
            return CycNum(n, (1 / self.coeffs[0],))
        # extended Euclid against Phi_n over Q[x]
        mod = [Fraction(c) for c in cyclotomic_polynomial(n)]
        old_r, r = mod, _poly_trim(list(self.coeffs))
        old_s, s = [_ZERO], [_ONE]
        while _poly_deg(r) > 0:
            q = _poly_quo(old_r, r)
            old_r, r = r, _poly_trim(_poly_sub(old_r, _poly_mul(q, r)))
            old_s, s = s, _poly_trim(_poly_sub(old_s, _poly_mul(q, s)))
        if not r:
            raise ZeroDivisionError("not invertible modulo Phi_n")
        c = r[0]
        inv = [x / c for x in s]
        inv += [_ZERO] * (phi - len(inv))
        return CycNum(n, inv[:phi])

    def __truediv__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other, self.conductor)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # value equality crosses conductors; keep unhashable

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycNum({self.conductor}, {cyc_format(self)!r})"

    def __str__(self):
        return cyc_format(self)


# -- polynomial helpers over Fraction (dense, constant term first) --------

def _poly_deg(p) -> int:
    return len(p) - 1


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    for i, c in enumerate(b):
        a[i] -= c
    return a


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_quo(a, b):
    a = list(a)
    db, lead = _poly_deg(b), b[-1]
    q = [_ZERO] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q


# -- text format -----------------------------------------------------------
#
# rational ::= int ['/' posint]
# term     ::= rational ['*' zpart] | zpart
# zpart    ::= 'z' ['^' nonneg-int]
# expr     ::= ['+'|'-'] term (('+'|'-') term)*

_TERM_RE = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)(\*)?)?(z(?:\^(\d+))?)?$")


def cyc_parse(text: str, conductor: int) -> CycNum:
    """Parse a coefficient string into canonical form modulo Phi_n."""
    if conductor < 1:
        raise ValueError(f"conductor must be >= 1, got {conductor}")
    s = re.sub(r"\s+", "", text.replace("−", "-"))
    if not s:
        raise ParseError("empty coefficient string")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise ParseError(f"malformed coefficient string: {text!r}")
    total = CycNum.zero(conductor)
    table = _power_table(conductor)
    for tok in tokens:
        m = _TERM_RE.match(tok)
        if not m:
            raise ParseError(f"bad term {tok!r} in {text!r}")
        sign, rat, star, zpart, exp = m.groups()
        if rat is None and zpart is None:
            raise ParseError(f"bad term {tok!r} in {text!r}")
        if star and zpart is None:
            raise ParseError(f"dangling '*' in term {tok!r}")
        try:
            coeff = Fraction(rat) if rat is not None else _ONE
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in term {tok!r}") from None
        if sign == "-":
            coeff = -coeff
        if zpart is None:
            term = CycNum.from_rational(coeff, conductor)
        else:
            e = int(exp) if exp is not None else 1
            row = table[e % conductor]
            term = CycNum(conductor, tuple(coeff * t for t in row))
        total = total + term
    return total


def cyc_format(x: CycNum) -> str:
    """Canonical text form; cyc_parse(cyc_format(x), x.conductor) == x."""
    pieces = []
    for e, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            zp = "z" if e == 1 else f"z^{e}"
            body = zp if mag == 1 else f"{mag}*{zp}"
        pieces.append((c < 0, body))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
