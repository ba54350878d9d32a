"""Exact dense linear and multilinear algebra over CycNum.

Matrices act on column coordinate vectors.  The Kronecker index convention
is fixed project-wide: basis vector i of the left factor tensored with
basis vector j of the right factor sits at flat index i * dim_right + j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, lcm


class SingularMatrixError(ArithmeticError):
    pass


def _as_cyc(value, conductor: int) -> CycNum:
    if isinstance(value, CycNum):
        return value
    return CycNum.from_rational(value, conductor)


class Mat:
    """Dense matrix of CycNum entries sharing one conductor."""

    __slots__ = ("rows", "cols", "entries", "conductor")

    def __init__(self, entries, conductor: int | None = None):
        entries = [list(row) for row in entries]
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        n = conductor or 1
        for row in entries:
            for e in row:
                if isinstance(e, CycNum):
                    n = lcm(n, e.conductor)
        self.entries = [
            [_as_cyc(e, n).lift(n) for e in row] for row in entries
        ]
        self.rows = rows
        self.cols = cols
        self.conductor = n

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "Mat":
        one, zero = CycNum.one(conductor), CycNum.zero(conductor)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int = 1) -> "Mat":
        zero = CycNum.zero(conductor)
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns, rows: int, conductor: int = 1) -> "Mat":
        zero = CycNum.zero(conductor)
        entries = [[zero] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                entries[i][j] = v
        return cls(entries, conductor)

    def lift(self, conductor: int) -> "Mat":
        if conductor == self.conductor:
            return self
        return Mat(self.entries, conductor)

    def copy_entries(self):
        return [list(row) for row in self.entries]

    def column(self, j: int):
        return [row[j] for row in self.entries]

    # -- arithmetic ------------------------------------------------------

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self, other
        if a.conductor != b.conductor:
            n = lcm(a.conductor, b.conductor)
            a, b = a.lift(n), b.lift(n)
        zero = CycNum.zero(a.conductor)
        out = [[zero] * b.cols for _ in range(a.rows)]
        for i in range(a.rows):
            arow = a.entries[i]
            orow = out[i]
            for k in range(a.cols):
                aik = arow[k]
                if aik.is_zero():
                    continue
                brow = b.entries[k]
                for j in range(b.cols):
                    bkj = brow[j]
                    if not bkj.is_zero():
                        orow[j] = orow[j] + aik * bkj
        return Mat(out, a.conductor)

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(
            [[x + y for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(
            [[x - y for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "Mat":
        return Mat([[-x for x in row] for row in self.entries])

    def scale(self, c) -> "Mat":
        return Mat([[x * c for x in row] for row in self.entries])

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = Mat.identity(self.rows, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def apply(self, vec):
        """Matrix times a dense coordinate column."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch in matrix-vector product")
        zero = CycNum.zero(self.conductor)
        out = [zero] * self.rows
        for j, vj in enumerate(vec):
            if isinstance(vj, CycNum) and vj.is_zero():
                continue
            for i in range(self.rows):
                aij = self.entries[i][j]
                if not aij.is_zero():
                    out[i] = out[i] + aij * vj
        return out

    def transpose(self) -> "Mat":
        return Mat(
            [[self.entries[i][j] for i in range(self.rows)]
             for j in range(self.cols)]
        )

    def trace(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = CycNum.zero(self.conductor)
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            x == y
            for r1, r2 in zip(self.entries, other.entries)
            for x, y in zip(r1, r2)
        )

    __hash__ = None

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, conductor={self.conductor})"


@dataclass
class Tensor3:
    """Cubical array of structure constants, entry (i, j, k) at flat index
    (i*d + j)*d + k."""

    d: int
    entries: tuple

    def __init__(self, d: int, entries):
        entries = tuple(entries)
        if len(entries) != d ** 3:
            raise ValueError(f"need {d**3} entries, got {len(entries)}")
        self.d = d
        self.entries = entries

    @classmethod
    def from_dict(cls, d: int, data: dict, conductor: int = 1) -> "Tensor3":
        n = conductor
        for v in data.values():
            if isinstance(v, CycNum):
                n = lcm(n, v.conductor)
        zero = CycNum.zero(n)
        flat = [zero] * d ** 3
        for (i, j, k), v in data.items():
            flat[(i * d + j) * d + k] = _as_cyc(v, n).lift(n)
        return cls(d, flat)

    @property
    def conductor(self) -> int:
        n = 1
        for e in self.entries:
            n = lcm(n, e.conductor)
        return n

    def lift(self, conductor: int) -> "Tensor3":
        return Tensor3(self.d, tuple(e.lift(conductor) for e in self.entries))

    def get(self, i: int, j: int, k: int) -> CycNum:
        return self.entries[(i * self.d + j) * self.d + k]

    def slices(self):
        """Nonzero entries grouped by leading index: list over i of tuples
        (j, k, coeff)."""
        d = self.d
        out = [[] for _ in range(d)]
        for flat, e in enumerate(self.entries):
            if not e.is_zero():
                ij, k = divmod(flat, d)
                i, j = divmod(ij, d)
                out[i].append((j, k, e))
        return [tuple(row) for row in out]

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.d == other.d and all(
            x == y for x, y in zip(self.entries, other.entries)
        )

    __hash__ = None


@dataclass
class AffineSolution:
    """Exact solution set {particular + span(nullspace)} of A x = b."""

    particular: list
    nullspace: list


def _rref(rows, width, pivot_cols_limit):
    """In-place reduced row echelon over the leading pivot_cols_limit
    columns; returns the list of pivot columns.  Pivot choice: first row
    (lowest index) with a nonzero entry in the current column."""
    nrows = len(rows)
    pr = 0
    pivots = []
    for c in range(pivot_cols_limit):
        r = None
        for i in range(pr, nrows):
            if not rows[i][c].is_zero():
                r = i
                break
        if r is None:
            continue
        rows[pr], rows[r] = rows[r], rows[pr]
        piv = rows[pr][c]
        if not piv.is_one():
            inv = piv.inverse()
            rows[pr] = [e * inv for e in rows[pr]]
        prow = rows[pr]
        for i in range(nrows):
            if i == pr:
                continue
            f = rows[i][c]
            if f.is_zero():
                continue
            row = rows[i]
            rows[i] = [
                x - f * y if not y.is_zero() else x
                for x, y in zip(row, prow)
            ]
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return pivots


def solve(A: Mat, b) -> AffineSolution | None:
    """Exact affine solution set of A x = b, or None when inconsistent."""
    n = A.conductor
    for v in b:
        if isinstance(v, CycNum):
            n = lcm(n, v.conductor)
    a = A.lift(n)
    bb = [_as_cyc(v, n).lift(n) for v in b]
    if len(bb) != a.rows:
        raise ValueError("shape mismatch between matrix and right-hand side")
    rows = [list(row) + [bv] for row, bv in zip(a.entries, bb)]
    if not rows:
        return AffineSolution([], _nullspace_from([], a.cols, n))
    pivots = _rref(rows, a.cols, a.cols)
    rank = len(pivots)
    for row in rows[rank:]:
        if not row[-1].is_zero():
            return None
    zero = CycNum.zero(n)
    particular = [zero] * a.cols
    for r, c in enumerate(pivots):
        particular[c] = rows[r][-1]
    basis = _nullspace_from(
        [(r, c, rows[r]) for r, c in enumerate(pivots)], a.cols, n
    )
    return AffineSolution(particular, basis)


def _nullspace_from(pivot_rows, cols, conductor):
    pivot_cols = {c for _, c, _ in pivot_rows}
    zero, one = CycNum.zero(conductor), CycNum.one(conductor)
    basis = []
    for f in range(cols):
        if f in pivot_cols:
            continue
        v = [zero] * cols
        v[f] = one
        for _, c, row in pivot_rows:
            if not row[f].is_zero():
                v[c] = -row[f]
        basis.append(v)
    return basis


def nullspace(A: Mat):
    return solve(A, [CycNum.zero(A.conductor)] * A.rows).nullspace


def rank(A: Mat) -> int:
    rows = A.copy_entries()
    return len(_rref(rows, A.cols, A.cols))


def inverse(A: Mat) -> Mat:
    """Exact inverse; raises SingularMatrixError when A is singular."""
    if A.rows != A.cols:
        raise ValueError("inverse of a non-square matrix")
    n = A.conductor
    d = A.rows
    ident = Mat.identity(d, n)
    rows = [list(r) + list(i) for r, i in zip(A.entries, ident.entries)]
    pivots = _rref(rows, 2 * d, d)
    if len(pivots) != d:
        raise SingularMatrixError("singular matrix")
    return Mat([row[d:] for row in rows], n)


def kron(A: Mat, B: Mat) -> Mat:
    """Kronecker product with (i tensor j) -> i * dim_B + j."""
    n = lcm(A.conductor, B.conductor)
    a, b = A.lift(n), B.lift(n)
    zero = CycNum.zero(n)
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [[zero] * cols for _ in range(rows)]
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            av = a.entries[i1][j1]
            if av.is_zero():
                continue
            for i2 in range(b.rows):
                target = out[i1 * b.rows + i2]
                base = j1 * b.cols
                for j2 in range(b.cols):
                    bv = b.entries[i2][j2]
                    if not bv.is_zero():
                        target[base + j2] = av * bv
    return Mat(out, n)


def is_nilpotent(A: Mat) -> bool:
    """True iff A^d = 0 for d the matrix size (Cayley-Hamilton bound)."""
    if A.rows != A.cols:
        raise ValueError("nilpotency of a non-square matrix")
    d = A.rows
    if d == 0:
        return True
    m = A
    e = 1
    while e < d:
        m = m @ m
        e *= 2
    return m.is_zero()
