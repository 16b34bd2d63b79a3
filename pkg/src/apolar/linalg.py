"""Exact dense linear algebra over the rationals and over prime fields.

Everything downstream (catalecticants, syzygy solves, orbit tangent maps)
reduces to rank / kernel / solve on small dense matrices, so this module is
the computational substrate.  No floating point anywhere: scalars are
`fractions.Fraction` in characteristic 0, or integer residues in [0, p) over
a prime field.

Pivoting is deterministic (first nonzero entry in column order), so kernel
bases and particular solutions are reproducible byte-for-byte.  Elimination
is done with integer cross-multiplication (denominators cleared per row,
rows renormalized by their gcd), which keeps the inner loop in machine/big
integers instead of Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 (rationals) or a prime p.

    Consumers that carry a socle degree j must reject 0 < p <= j themselves;
    see `check_socle_degree`.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def element(self, value) -> Fraction | int:
        """Coerce an int / Fraction / 'num/den' string into canonical form."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.characteristic == 0:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return value.numerator * pow(den, p - 2, p) % p
        return int(value) % p

    def zero(self) -> Fraction | int:
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self) -> Fraction | int:
        return Fraction(1) if self.characteristic == 0 else 1

    def add(self, a, b):
        c = a + b
        return c if self.characteristic == 0 else c % self.characteristic

    def mul(self, a, b):
        c = a * b
        return c if self.characteristic == 0 else c % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            return 1 / Fraction(a)
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero residue")
        return pow(a, self.characteristic - 2, self.characteristic)

    def check_socle_degree(self, j: int) -> None:
        """Reject fields with 0 < p <= j (duality needs char 0 or p > j)."""
        p = self.characteristic
        if 0 < p <= j:
            raise ValueError(
                f"characteristic {p} is not allowed with socle degree {j}: "
                "it must be 0 or a prime exceeding the socle degree"
            )


QQ = FieldSpec(0)


def _row_to_int(row: list[Fraction]) -> list[int]:
    """Clear denominators of a rational row (row content normalized out)."""
    lcm = 1
    for a in row:
        d = a.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(a * lcm) for a in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _normalize_int_row(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


class ExactMatrix:
    """Dense matrix of exact field elements with deterministic reductions."""

    def __init__(self, rows: int, cols: int, entries: list[list], field: FieldSpec = QQ):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match declared dimensions")
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = [[field.element(v) for v in r] for r in entries]

    @classmethod
    def from_rows(cls, entries: list[list], field: FieldSpec = QQ, cols: int | None = None) -> "ExactMatrix":
        rows = len(entries)
        if cols is None:
            if rows == 0:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(entries[0])
        return cls(rows, cols, entries, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "ExactMatrix":
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.entries[i][i] = field.one()
        return m

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [r[:] for r in self.entries], self.field)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                           self.field)

    def mul_vector(self, v: list) -> list:
        f = self.field
        v = [f.element(a) for a in v]
        if len(v) != self.cols:
            raise ValueError("vector length must equal column count")
        out = []
        for row in self.entries:
            s = f.zero()
            for a, b in zip(row, v):
                if a and b:
                    s = f.add(s, f.mul(a, b))
            out.append(s)
        return out

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.cols != self.cols or other.field != self.field:
            raise ValueError("stack needs matching column count and field")
        return ExactMatrix(self.rows + other.rows, self.cols,
                           self.entries + other.entries, self.field)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.field == other.field
                and self.entries == other.entries)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, char {self.field.characteristic})"

    # -- echelon machinery ------------------------------------------------

    def _int_rows(self) -> list[list[int]]:
        return [_row_to_int(r) for r in self.entries]

    def rank(self) -> int:
        if self.field.is_rational:
            return _rank_int(self._int_rows(), self.cols)
        return _rank_mod(self.entries, self.cols, self.field.characteristic)

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        if self.field.is_rational:
            return _rref_int(self._int_rows(), self.cols)
        return _rref_mod([r[:] for r in self.entries], self.cols, self.field.characteristic)

    def kernel_basis(self) -> list[list]:
        """Basis of the right null space, echelonized in the fixed column order.

        Each vector is scaled so that its first nonzero coordinate is 1, and
        vectors are sorted by that coordinate's position.
        """
        f = self.field
        rref_rows, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [f.zero()] * self.cols
            v[fc] = f.one()
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(rref_rows[i][fc])
            lead = next(c for c in range(self.cols) if v[c])
            scale = f.inv(v[lead])
            v = [f.mul(scale, a) for a in v]
            basis.append((lead, v))
        basis.sort(key=lambda t: t[0])
        return [v for _, v in basis]

    def solve(self, b: list) -> list | None:
        """One exact solution of M x = b (echelon particular solution), or None."""
        f = self.field
        b = [f.element(v) for v in b]
        if len(b) != self.rows:
            raise ValueError("right-hand side length must equal row count")
        aug = ExactMatrix(self.rows, self.cols + 1,
                          [row + [bv] for row, bv in zip(self.entries, b)], f)
        rref_rows, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero()] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = rref_rows[i][self.cols]
        return x


def _rank_int(rows: list[list[int]], ncols: int) -> int:
    rows = [r for r in rows if any(r)]
    rank = 0
    col = 0
    nrows = len(rows)
    while rank < nrows and col < ncols:
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pval = prow[col]
        for i in range(rank + 1, nrows):
            v = rows[i][col]
            if v:
                ri = rows[i]
                rows[i] = _normalize_int_row(
                    [pval * a - v * b for a, b in zip(ri, prow)])
        rank += 1
        col += 1
    return rank


def _rref_int(rows: list[list[int]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    work = [r for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    nrows = len(work)
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        pval = prow[col]
        for i in range(nrows):
            if i == rank:
                continue
            v = work[i][col]
            if v:
                ri = work[i]
                work[i] = _normalize_int_row(
                    [pval * a - v * b for a, b in zip(ri, prow)])
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    reduced = []
    for i, col in enumerate(pivots):
        pval = work[i][col]
        reduced.append([Fraction(a, pval) for a in work[i]])
    return reduced, pivots


def _rank_mod(rows: list[list[int]], ncols: int, p: int) -> int:
    rows = [[v % p for v in r] for r in rows]
    rows = [r for r in rows if any(r)]
    rank = 0
    col = 0
    nrows = len(rows)
    while rank < nrows and col < ncols:
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        prow = [a * inv % p for a in prow]
        rows[rank] = prow
        for i in range(rank + 1, nrows):
            v = rows[i][col]
            if v:
                ri = rows[i]
                rows[i] = [(a - v * b) % p for a, b in zip(ri, prow)]
        rank += 1
        col += 1
    return rank


def _rref_mod(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    work = [[v % p for v in r] for r in rows]
    work = [r for r in work if any(r)]
    pivots: list[int] = []
    rank = 0
    nrows = len(work)
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][col], p - 2, p)
        work[rank] = [a * inv % p for a in work[rank]]
        prow = work[rank]
        for i in range(nrows):
            if i != rank and work[i][col]:
                v = work[i][col]
                work[i] = [(a - v * b) % p for a, b in zip(work[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return work[:rank], pivots


# -- spec-level operation names -------------------------------------------

def rank(m: ExactMatrix) -> int:
    """Row rank by exact Gaussian elimination; deterministic for fixed input."""
    return m.rank()


def kernel_basis(m: ExactMatrix) -> list[list]:
    """Basis of the right null space in reduced echelon form."""
    return m.kernel_basis()


def solve_linear(m: ExactMatrix, b: list) -> list | None:
    """One solution of M x = b if consistent, else None."""
    return m.solve(b)
