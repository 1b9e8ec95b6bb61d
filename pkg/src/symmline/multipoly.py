"""Sparse multivariate polynomials in X1..Xn with the permutation action.

Terms map exponent tuples (fixed length n) to nonzero coefficients.
The monomial order used throughout is lexicographic with X1 > X2 > ...,
which is the order the symmetric decomposition algorithm relies on.
"""

from __future__ import annotations

from itertools import combinations

from .errors import RingMismatchError
from .rings import Ring, RingValue


class MultiPoly:
    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: Ring, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        clean = {}
        for expo, c in (terms or {}).items():
            expo = tuple(expo)
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo}")
            c = ring.value(c)
            if not c.is_zero:
                clean[expo] = c
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    # constructors ---------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring, nvars: int) -> MultiPoly:
        return cls(ring, nvars)

    @classmethod
    def constant(cls, ring: Ring, nvars: int, c) -> MultiPoly:
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, ring: Ring) -> MultiPoly:
        """X_i, with 1 <= i <= nvars."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        expo = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls(ring, nvars, {expo: 1})

    # structure ------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def _check(self, other: MultiPoly):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"mixed rings {self.ring.name} and {other.ring.name}"
            )
        if self.nvars != other.nvars:
            raise ValueError(f"arity mismatch {self.nvars} vs {other.nvars}")

    # arithmetic -----------------------------------------------------
    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            cur = out.get(expo)
            s = c if cur is None else cur + c
            if s.is_zero:
                out.pop(expo, None)
            else:
                out[expo] = s
        return MultiPoly(self.ring, self.nvars, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(
            self.ring, self.nvars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        out: dict[tuple, RingValue] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                cur = out.get(expo)
                s = p if cur is None else cur + p
                if s.is_zero:
                    out.pop(expo, None)
                else:
                    out[expo] = s
        return MultiPoly(self.ring, self.nvars, out)

    def scale(self, c) -> MultiPoly:
        c = self.ring.value(c)
        return MultiPoly(
            self.ring, self.nvars, {e: c * v for e, v in self.terms.items()}
        )

    def __pow__(self, k: int) -> MultiPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.ring, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, values) -> RingValue:
        values = [self.ring.value(v) for v in values]
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        acc = self.ring.zero
        for expo, c in self.terms.items():
            t = c
            for v, e in zip(values, expo):
                if e:
                    t = t * v**e
            acc = acc + t
        return acc

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.nvars, frozenset(self.terms.items())))

    # rendering ------------------------------------------------------
    def __str__(self):
        return render_terms(self.ring, self.terms, lambda i: f"X{i + 1}")

    def __repr__(self):
        return f"MultiPoly({self.ring.name}, n={self.nvars}, {self})"


def render_terms(ring: Ring, terms, varname) -> str:
    """Shared renderer for MultiPoly and the e-basis; descending lex."""
    if not terms:
        return "0"
    parts = []
    for expo in sorted(terms, reverse=True):
        c = terms[expo]
        neg, body = ring._sign_split(c.payload)
        text = ring._render(body)
        if not neg and _bare_negative(text):
            neg = True
            text = text[1:]
        factors = []
        for i, e in enumerate(expo):
            if e == 1:
                factors.append(varname(i))
            elif e > 1:
                factors.append(f"{varname(i)}^{e}")
        if not factors:
            term = _wrap(text)
        elif text == "1":
            term = "*".join(factors)
        else:
            term = "*".join([_wrap(text)] + factors)
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f" - {term}" if neg else f" + {term}")
    return "".join(parts)


def _wrap(text: str) -> str:
    if " " in text or "+" in text or "-" in text[1:]:
        return f"({text})"
    return text


def _bare_negative(text: str) -> bool:
    return (
        text.startswith("-")
        and " " not in text
        and "+" not in text
        and "-" not in text[1:]
    )


def apply_permutation(perm, m: MultiPoly) -> MultiPoly:
    """Relabel variables X_i -> X_perm(i); perm maps 0-based positions."""
    perm = tuple(perm)
    if sorted(perm) != list(range(m.nvars)):
        raise ValueError(f"not a permutation of 0..{m.nvars - 1}: {perm}")
    out = {}
    for expo, c in m.terms.items():
        new = [0] * m.nvars
        for i, e in enumerate(expo):
            new[perm[i]] = e
        out[tuple(new)] = c
    return MultiPoly(m.ring, m.nvars, out)


def is_symmetric(m: MultiPoly) -> bool:
    """Fixed by the adjacent transpositions, which generate S_n."""
    for i in range(m.nvars - 1):
        perm = list(range(m.nvars))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if apply_permutation(perm, m) != m:
            return False
    return True


def elementary(i: int, n: int, ring: Ring) -> MultiPoly:
    """The i-th elementary symmetric polynomial in n variables; e_0 = 1."""
    if not 0 <= i <= n:
        raise ValueError(f"elementary index {i} out of range 0..{n}")
    if i == 0:
        return MultiPoly.constant(ring, n, 1)
    terms = {}
    for subset in combinations(range(n), i):
        expo = [0] * n
        for k in subset:
            expo[k] = 1
        terms[tuple(expo)] = 1
    return MultiPoly(ring, n, terms)
