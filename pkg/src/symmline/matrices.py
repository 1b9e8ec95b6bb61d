"""Square matrices with exact entries and division-free determinants.

char_poly uses the Samuelson-Berkowitz iteration (O(n^4) ring
operations, no divisions), so it is correct over rings with zero
divisors such as Zmod(12) where fraction-free elimination breaks.
det is read off the characteristic polynomial's constant term.
"""

from __future__ import annotations

from .errors import RingMismatchError
from .poly import MonicPoly, Poly, poly_divmod
from .rings import Ring, RingValue


class SquareMatrix:
    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(ring.value(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square with n >= 1")
        self.ring = ring
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> SquareMatrix:
        return cls(
            ring,
            [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zero(cls, ring: Ring, n: int) -> SquareMatrix:
        return cls(ring, [[ring.zero] * n for _ in range(n)])

    @classmethod
    def from_columns(cls, ring: Ring, cols) -> SquareMatrix:
        return cls(ring, list(zip(*cols)))

    def entry(self, i: int, j: int) -> RingValue:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[RingValue, ...]:
        return tuple(row[j] for row in self.rows)

    def _check(self, other: SquareMatrix):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"mixed rings {self.ring.name} and {other.ring.name}"
            )
        if self.n != other.n:
            raise ValueError(f"size mismatch {self.n} vs {other.n}")

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        self._check(other)
        return SquareMatrix(
            self.ring,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def __neg__(self) -> SquareMatrix:
        return SquareMatrix(self.ring, [[-a for a in row] for row in self.rows])

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        return self + (-other)

    def __mul__(self, other: SquareMatrix) -> SquareMatrix:
        self._check(other)
        n = self.n
        cols = [other.column(j) for j in range(n)]
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append([_dot(row, cols[j], self.ring) for j in range(n)])
        return SquareMatrix(self.ring, out)

    def scale(self, c) -> SquareMatrix:
        c = self.ring.value(c)
        return SquareMatrix(self.ring, [[c * a for a in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __str__(self):
        return "[" + "; ".join(
            ", ".join(str(a) for a in row) for row in self.rows
        ) + "]"

    def __repr__(self):
        return f"SquareMatrix({self.ring.name}, {self})"


def _dot(u, v, ring: Ring) -> RingValue:
    acc = ring.zero
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def char_poly(m: SquareMatrix) -> MonicPoly:
    """det(X*I - M) by the Berkowitz iteration, monic of degree n."""
    ring = m.ring
    n = m.n
    # descending coefficient vector of the k x k leading principal block
    coeffs = [ring.one]
    for k in range(1, n + 1):
        diag = m.rows[k - 1][k - 1]
        toeplitz = [ring.one, -diag]
        if k > 1:
            row = m.rows[k - 1][: k - 1]
            vec = [m.rows[i][k - 1] for i in range(k - 1)]
            toeplitz.append(-_dot(row, vec, ring))
            for _ in range(k - 2):
                vec = [
                    _dot(m.rows[i][: k - 1], vec, ring) for i in range(k - 1)
                ]
                toeplitz.append(-_dot(row, vec, ring))
        new = []
        for i in range(k + 1):
            acc = ring.zero
            for j in range(max(0, i - k), min(i, k - 1) + 1):
                acc = acc + toeplitz[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    return MonicPoly(Poly(ring, list(reversed(coeffs))))


def det(m: SquareMatrix) -> RingValue:
    """(-1)^n times the constant term of char_poly(m)."""
    constant = char_poly(m).poly.coeff(0)
    return constant if m.n % 2 == 0 else -constant


def companion_matrix(f: MonicPoly) -> SquareMatrix:
    """Matrix of multiplication by X on 1, x, .., x^(n-1) of A[X]/(F)."""
    return mult_matrix(Poly.gen(f.ring), f)


def mult_matrix(f: Poly, modulus: MonicPoly) -> SquareMatrix:
    """Matrix of multiplication by f on A[X]/(F); column j is f*x^j mod F."""
    if f.ring != modulus.ring:
        raise RingMismatchError(
            f"mixed rings {f.ring.name} and {modulus.ring.name}"
        )
    n = modulus.degree
    cols = []
    rem = poly_divmod(f, modulus)[1]
    for _ in range(n):
        cols.append([rem.coeff(i) for i in range(n)])
        rem = poly_divmod(rem.shift(1), modulus)[1]
    return SquareMatrix.from_columns(f.ring, cols)


def poly_at_matrix(f: Poly, m: SquareMatrix) -> SquareMatrix:
    """Evaluate f at a matrix argument (Horner)."""
    if f.ring != m.ring:
        raise RingMismatchError(f"mixed rings {f.ring.name} and {m.ring.name}")
    acc = SquareMatrix.zero(m.ring, m.n)
    one = SquareMatrix.identity(m.ring, m.n)
    for c in reversed(f.coeffs):
        acc = acc * m + one.scale(c)
    return acc
