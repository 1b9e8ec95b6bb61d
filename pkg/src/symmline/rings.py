"""Exact arithmetic over the supported coefficient rings.

A ring is one of: the integers ZZ, the rationals QQ, the residue ring
Zmod(m) for m >= 2, the prime field GF(p), or a polynomial ring
Poly(base, var) over one of these.  Elements are RingValue objects that
pair a ring with a canonical payload:

    ZZ        arbitrary-precision int
    QQ        fractions.Fraction (lowest terms, positive denominator)
    Zmod/GF   int residue in [0, m)
    Poly(...) a poly.Poly over the base ring, no trailing zeros

Equality of values is payload equality, which the canonical forms make
decidable.  All values are immutable; every operation returns a fresh
value, so sharing across threads is safe.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatchError, UnsupportedRingError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Common interface of the supported rings.

    Subclasses implement the payload-level operations; RingValue wraps
    them with operator syntax and matching-ring checks.
    """

    is_field = False
    is_domain = False
    is_finite = False
    size: int | None = None

    # payload-level primitives -------------------------------------
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _from_int(self, k: int):
        raise NotImplementedError

    def _is_unit(self, a) -> bool:
        raise NotImplementedError

    def _inv(self, a):
        """Multiplicative inverse payload, or None when there is none."""
        return None

    def _exact_div(self, a, b):
        """Exact quotient a/b in the ring, or None when unsupported."""
        return None

    def _render(self, a) -> str:
        return str(a)

    def _sign_split(self, a):
        """(is_negative, payload to render), for polynomial output."""
        return False, a

    # value layer ---------------------------------------------------
    def value(self, x) -> RingValue:
        if isinstance(x, RingValue):
            if x.ring != self:
                raise RingMismatchError(f"value of {x.ring.name} used in {self.name}")
            return x
        if isinstance(x, int):
            return RingValue(self, self._from_int(x))
        return RingValue(self, self._canon(x))

    def _canon(self, payload):
        raise TypeError(f"cannot build a {self.name} value from {payload!r}")

    @property
    def zero(self) -> RingValue:
        return self.value(0)

    @property
    def one(self) -> RingValue:
        return self.value(1)

    def elements(self):
        """All values of a finite ring, in a fixed order."""
        raise UnsupportedRingError(f"{self.name} is not finite")

    @property
    def name(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __ne__(self, other):
        return not self.__eq__(other)


class RingValue:
    """An element of a ring, kept in canonical form."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other) -> RingValue:
        if isinstance(other, RingValue):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"mixed rings {self.ring.name} and {other.ring.name}"
                )
            return other
        if isinstance(other, int):
            return self.ring.value(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingValue(self.ring, self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return RingValue(self.ring, self.ring._neg(self.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingValue(
            self.ring, self.ring._add(self.payload, self.ring._neg(other.payload))
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RingValue(self.ring, self.ring._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.value(other)
        if not isinstance(other, RingValue):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    @property
    def is_zero(self) -> bool:
        return self.payload == self.ring._from_int(0)

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.payload)

    def try_inverse(self) -> RingValue | None:
        inv = self.ring._inv(self.payload)
        return None if inv is None else RingValue(self.ring, inv)

    def __str__(self):
        return self.ring._render(self.payload)

    def __repr__(self):
        return f"<{self.ring.name}: {self}>"


class IntegerRing(Ring):
    is_domain = True

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _from_int(self, k):
        return k

    def _is_unit(self, a):
        return a in (1, -1)

    def _inv(self, a):
        return a if a in (1, -1) else None

    def _exact_div(self, a, b):
        q, r = divmod(a, b)
        return q if r == 0 else None

    def _sign_split(self, a):
        return (a < 0), abs(a)

    @property
    def name(self):
        return "ZZ"

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash("ZZ")


class RationalRing(Ring):
    is_field = True
    is_domain = True

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _from_int(self, k):
        return Fraction(k)

    def _canon(self, payload):
        if isinstance(payload, Fraction):
            return payload
        return super()._canon(payload)

    def _is_unit(self, a):
        return a != 0

    def _inv(self, a):
        return None if a == 0 else 1 / a

    def _exact_div(self, a, b):
        return None if b == 0 else a / b

    def _sign_split(self, a):
        return (a < 0), abs(a)

    @property
    def name(self):
        return "QQ"

    def __eq__(self, other):
        return type(other) is RationalRing

    def __hash__(self):
        return hash("QQ")


class ZmodRing(Ring):
    """Integers modulo m, residues kept in [0, m)."""

    is_finite = True

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.is_domain = is_prime(modulus)
        self.size = modulus

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _neg(self, a):
        return -a % self.modulus

    def _mul(self, a, b):
        return a * b % self.modulus

    def _from_int(self, k):
        return k % self.modulus

    def _is_unit(self, a):
        return _gcd(a, self.modulus) == 1

    def _inv(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            return None

    def _exact_div(self, a, b):
        if not self.is_domain:
            return None
        inv = self._inv(b)
        return None if inv is None else a * inv % self.modulus

    def elements(self):
        return (RingValue(self, i) for i in range(self.modulus))

    @property
    def name(self):
        return f"Zmod:{self.modulus}"

    def __eq__(self, other):
        return type(other) is type(self) and other.modulus == self.modulus

    def __hash__(self):
        return hash((type(self).__name__, self.modulus))


class PrimeField(ZmodRing):
    """The field with p elements, p prime (checked)."""

    is_field = True
    is_domain = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"GF parameter must be prime, got {p!r}")
        super().__init__(p)

    def _is_unit(self, a):
        return a != 0

    @property
    def name(self):
        return f"GF:{self.modulus}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(m: int) -> ZmodRing:
    return ZmodRing(m)


def GF(p: int) -> PrimeField:
    return PrimeField(p)
