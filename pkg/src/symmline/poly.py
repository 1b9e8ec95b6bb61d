"""Dense univariate polynomials over a ring, and polynomial base rings.

A Poly stores its coefficients ascending by degree with no trailing
zeros, so equality is tuple equality.  The degree of the zero polynomial
is None, a deliberate sentinel: call sites must handle the zero case
explicitly instead of arithmetic silently proceeding on -1.

MonicPoly refines Poly (leading coefficient exactly one, degree >= 1)
and provides the signed coefficient view c_1..c_n defined by

    F = X^n - c_1 X^(n-1) + c_2 X^(n-2) - ... + (-1)^n c_n

which is the form consumed by the evaluation maps in norms.py.

PolyRing(base, var) turns polynomials into ring elements, giving towers
such as Poly:ZZ:T whose values print as polynomials in T.
"""

from __future__ import annotations

from .errors import (
    NotInvertibleError,
    RingMismatchError,
    UnsupportedRingError,
)
from .rings import Ring, RingValue


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        cs = [ring.value(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # constructors ---------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring) -> Poly:
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: Ring, c) -> Poly:
        return cls(ring, (c,))

    @classmethod
    def gen(cls, ring: Ring) -> Poly:
        """The variable X."""
        return cls(ring, (0, 1))

    @classmethod
    def from_roots(cls, ring: Ring, roots) -> Poly:
        acc = cls.constant(ring, 1)
        for a in roots:
            acc = acc * cls(ring, (-ring.value(a), ring.one))
        return acc

    # structure ------------------------------------------------------
    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> RingValue:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> RingValue:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def _check(self, other: Poly):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"mixed rings {self.ring.name} and {other.ring.name}"
            )

    # arithmetic -----------------------------------------------------
    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ring, out)

    def __neg__(self) -> Poly:
        return Poly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    def scale(self, c) -> Poly:
        c = self.ring.value(c)
        return Poly(self.ring, [c * a for a in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by X^k."""
        if self.is_zero:
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: RingValue) -> RingValue:
        x = self.ring.value(x)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, ring: Ring) -> Poly:
        return Poly(ring, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    # rendering ------------------------------------------------------
    def render(self, var: str = "X") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            neg, body = self.ring._sign_split(c.payload)
            text = self.ring._render(body)
            if not neg and _bare_negative(text):
                neg = True
                text = text[1:]
            if i == 0:
                term = _wrap(text)
            else:
                power = var if i == 1 else f"{var}^{i}"
                term = power if text == "1" else f"{_wrap(text)}*{power}"
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f" - {term}" if neg else f" + {term}")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.ring.name}, {self})"


def _wrap(text: str) -> str:
    """Parenthesize composite coefficient renderings inside a term."""
    if " " in text or "+" in text or "-" in text[1:]:
        return f"({text})"
    return text


def _bare_negative(text: str) -> bool:
    """A single negated term such as -T or -3, not a composite sum."""
    return (
        text.startswith("-")
        and " " not in text
        and "+" not in text
        and "-" not in text[1:]
    )


class MonicPoly:
    """A monic polynomial of degree >= 1, wrapping a Poly."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        if poly.degree is None or poly.degree < 1:
            raise ValueError("monic polynomial must have degree >= 1")
        if not poly.is_monic():
            raise ValueError(f"leading coefficient of {poly} is not one")
        self.poly = poly

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs) -> MonicPoly:
        return cls(Poly(ring, coeffs))

    @classmethod
    def from_signed_coeffs(cls, ring: Ring, cs) -> MonicPoly:
        """Build X^n - c_1 X^(n-1) + ... + (-1)^n c_n from (c_1..c_n)."""
        cs = [ring.value(c) for c in cs]
        n = len(cs)
        coeffs = [ring.zero] * (n + 1)
        coeffs[n] = ring.one
        for i, c in enumerate(cs, start=1):
            coeffs[n - i] = -c if i % 2 else c
        return cls(Poly(ring, coeffs))

    @classmethod
    def from_roots(cls, ring: Ring, roots) -> MonicPoly:
        if not roots:
            raise ValueError("need at least one root")
        return cls(Poly.from_roots(ring, roots))

    @property
    def ring(self) -> Ring:
        return self.poly.ring

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def signed_coeffs(self) -> tuple[RingValue, ...]:
        """(c_1..c_n) with F = X^n - c_1 X^(n-1) + ... + (-1)^n c_n."""
        n = self.degree
        out = []
        for i in range(1, n + 1):
            a = self.poly.coeff(n - i)
            out.append(-a if i % 2 else a)
        return tuple(out)

    def __eq__(self, other):
        if isinstance(other, MonicPoly):
            return self.poly == other.poly
        if isinstance(other, Poly):
            return self.poly == other
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"MonicPoly({self.ring.name}, {self})"


def poly_divmod(f: Poly, g: MonicPoly | Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of f by a monic g; needs no base division."""
    gp = g.poly if isinstance(g, MonicPoly) else g
    if f.ring != gp.ring:
        raise RingMismatchError(f"mixed rings {f.ring.name} and {gp.ring.name}")
    if not gp.is_monic():
        raise ValueError("divisor must be monic")
    n = gp.degree
    rem = list(f.coeffs)
    if len(rem) <= n:
        return Poly.zero(f.ring), f
    quo = [f.ring.zero] * (len(rem) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if c.is_zero:
            continue
        quo[k - n] = c
        for i in range(n + 1):
            rem[k - n + i] = rem[k - n + i] - c * gp.coeffs[i]
    return Poly(f.ring, quo), Poly(f.ring, rem[:n])


def poly_mod(f: Poly, g: MonicPoly) -> Poly:
    return poly_divmod(f, g)[1]


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field (zero when both inputs are zero)."""
    if not f.ring.is_field:
        raise UnsupportedRingError(f"gcd needs a field base, got {f.ring.name}")
    a, b = f, g
    while not b.is_zero:
        if b.degree == 0:
            a, b = b, Poly.zero(f.ring)
            continue
        bm = MonicPoly(b.scale(b.leading.try_inverse()))
        a, b = b, poly_mod(a, bm)
    if a.is_zero:
        return a
    return a.scale(a.leading.try_inverse())


def poly_ext_gcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) over a field with u*f + v*g = d, d monic or zero."""
    if not f.ring.is_field:
        raise UnsupportedRingError(f"gcd needs a field base, got {f.ring.name}")
    ring = f.ring
    r0, r1 = f, g
    u0, u1 = Poly.constant(ring, 1), Poly.zero(ring)
    v0, v1 = Poly.zero(ring), Poly.constant(ring, 1)
    while not r1.is_zero:
        lead_inv = r1.leading.try_inverse()
        rm = MonicPoly(r1.scale(lead_inv)) if r1.degree >= 1 else None
        if rm is None:
            # degree-0 divisor: remainder is zero, quotient is r0/r1
            q = r0.scale(lead_inv)
            r = Poly.zero(ring)
        else:
            q_scaled, r = poly_divmod(r0, rm)
            q = q_scaled.scale(lead_inv)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    c = r0.leading.try_inverse()
    return r0.scale(c), u0.scale(c), v0.scale(c)


class QuotientElem:
    """A reduced residue class modulo a monic polynomial."""

    __slots__ = ("modulus", "rep")

    def __init__(self, modulus: MonicPoly, rep: Poly):
        rep = poly_mod(rep, modulus)
        self.modulus = modulus
        self.rep = rep

    def __eq__(self, other):
        if not isinstance(other, QuotientElem):
            return NotImplemented
        return self.modulus == other.modulus and self.rep == other.rep

    def __hash__(self):
        return hash((self.modulus, self.rep))

    def __str__(self):
        return f"{self.rep} mod ({self.modulus})"

    def __repr__(self):
        return f"QuotientElem({self})"


def invert_mod(f: Poly, F: MonicPoly) -> QuotientElem:
    """Inverse of f modulo F over a field, via the extended Euclidean
    algorithm; raises NotInvertibleError when gcd(f, F) != 1."""
    if f.ring != F.ring:
        raise RingMismatchError(f"mixed rings {f.ring.name} and {F.ring.name}")
    if not f.ring.is_field:
        raise UnsupportedRingError(
            f"invert_mod needs a field base, got {f.ring.name};"
            " use the unit-norm membership test instead"
        )
    d, u, _ = poly_ext_gcd(f, F.poly)
    if d.is_zero or d.degree != 0:
        raise NotInvertibleError(f"gcd({f}, {F}) = {d} is not 1")
    return QuotientElem(F, u)


class PolyRing(Ring):
    """Polynomials over a base ring, used as coefficients (ring towers)."""

    def __init__(self, base: Ring, var: str = "T"):
        if not var.isidentifier():
            raise ValueError(f"bad variable name {var!r}")
        if var == "X" or _looks_reserved(var):
            raise ValueError(f"variable name {var!r} is reserved")
        self.base = base
        self.var = var
        self.is_domain = base.is_domain

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _from_int(self, k):
        return Poly.constant(self.base, k)

    def _canon(self, payload):
        if isinstance(payload, Poly) and payload.ring == self.base:
            return payload
        return super()._canon(payload)

    def _is_unit(self, a):
        if not self.base.is_domain:
            raise UnsupportedRingError(
                f"unit test in {self.name} needs an integral-domain base"
            )
        return a.degree == 0 and a.coeffs[0].is_unit()

    def _inv(self, a):
        try:
            if not self._is_unit(a):
                return None
        except UnsupportedRingError:
            return None
        c = a.coeffs[0].try_inverse()
        return Poly.constant(self.base, c)

    def _render(self, a):
        return a.render(self.var)

    def gen(self) -> RingValue:
        """The tower variable as a ring element."""
        return RingValue(self, Poly.gen(self.base))

    def embed(self, v: RingValue) -> RingValue:
        """A base-ring element as a constant of the tower."""
        v = self.base.value(v)
        return RingValue(self, Poly.constant(self.base, v))

    @property
    def name(self):
        return f"Poly:{self.base.name}:{self.var}"

    def __eq__(self, other):
        return (
            type(other) is PolyRing
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("PolyRing", self.base, self.var))


def _looks_reserved(var: str) -> bool:
    """X1.., e1.. style names would collide with the expression grammar."""
    return (
        len(var) >= 2
        and var[0] in ("X", "e")
        and var[1:].isdigit()
    ) or var == "e"


def tower_constants(ring: Ring) -> dict[str, RingValue]:
    """Named generators of every tower level of `ring`, as ring values."""
    env: dict[str, RingValue] = {}
    if isinstance(ring, PolyRing):
        env[ring.var] = ring.gen()
        for name, v in tower_constants(ring.base).items():
            env[name] = ring.embed(v)
    return env
