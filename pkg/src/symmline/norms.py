"""Norms and characteristic polynomials of multiplication operators.

A monic F of degree n determines the evaluation map sending the basis
symbol e_i to F's i-th signed coefficient.  Pushing the symmetric
operators of f through it yields the characteristic polynomial of
multiplication-by-f on A[X]/(F); its signed constant term is the norm.

norm() itself takes the O(n^4) determinant route, which is the
production path: the symmetric route is exponential in n through the
multivariate expansion and exists for fidelity to the defining formula.
norm_checked() runs both and insists they agree.
"""

from __future__ import annotations

from .errors import InvariantViolationError, RingMismatchError
from .homs import RingHom
from .matrices import det, mult_matrix
from .multipoly import MultiPoly
from .poly import MonicPoly, Poly
from .rings import Ring, RingValue, ZZ
from .symmetric import SymElem, SymPoly1, diagonal_tensor, sym_char_poly


class EvalMap:
    """Substitution e_i -> i-th signed coefficient of a monic polynomial."""

    __slots__ = ("modulus", "ring", "arity", "images")

    def __init__(self, modulus: MonicPoly):
        self.modulus = modulus
        self.ring = modulus.ring
        self.arity = modulus.degree
        self.images = modulus.signed_coeffs

    def __call__(self, s: SymElem) -> RingValue:
        if s.ring != self.ring:
            raise RingMismatchError(
                f"element over {s.ring.name}, map over {self.ring.name}"
            )
        if s.arity != self.arity:
            raise ValueError(
                f"arity {s.arity} does not match degree {self.arity}"
            )
        return s.substitute(self.images)

    def apply_poly1(self, t: SymPoly1) -> Poly:
        """Evaluate the coefficients of a polynomial in the outer X."""
        return Poly(self.ring, [self(c) for c in t.coeffs])

    def __repr__(self):
        return f"EvalMap({self.modulus})"


def eval_sym(u: EvalMap, s: SymElem) -> RingValue:
    return u(s)


def mult_char_poly(f: Poly, modulus: MonicPoly) -> MonicPoly:
    """Characteristic polynomial of multiplication-by-f on A[X]/(F),
    computed through the symmetric operators of f."""
    if f.ring != modulus.ring:
        raise RingMismatchError(
            f"mixed rings {f.ring.name} and {modulus.ring.name}"
        )
    u = EvalMap(modulus)
    return MonicPoly(u.apply_poly1(sym_char_poly(f, modulus.degree)))


def norm(f: Poly, modulus: MonicPoly) -> RingValue:
    """The norm of f with respect to F: the determinant of
    multiplication-by-f on A[X]/(F)."""
    return det(mult_matrix(f, modulus))


def norm_symmetric(f: Poly, modulus: MonicPoly) -> RingValue:
    """The defining route: the evaluation map applied to the diagonal
    tensor f(X_1)*...*f(X_n)."""
    if f.ring != modulus.ring:
        raise RingMismatchError(
            f"mixed rings {f.ring.name} and {modulus.ring.name}"
        )
    return EvalMap(modulus)(diagonal_tensor(f, modulus.degree))


def norm_checked(f: Poly, modulus: MonicPoly) -> RingValue:
    """Both norm routes, compared; disagreement is a library bug."""
    a = norm(f, modulus)
    b = norm_symmetric(f, modulus)
    if a != b:
        raise InvariantViolationError(
            f"norm routes disagree for f={f}, F={modulus}: matrix {a},"
            f" symmetric {b}"
        )
    return a


def difference_product(p: int, q: int, ring: Ring = ZZ) -> MultiPoly:
    """prod_{i<=p} prod_{j<=q} (X_i - X_{p+j}) in p+q variables."""
    if p < 1 or q < 1:
        raise ValueError("block sizes must be >= 1")
    n = p + q
    acc = MultiPoly.constant(ring, n, 1)
    for i in range(1, p + 1):
        xi = MultiPoly.variable(i, n, ring)
        for j in range(1, q + 1):
            acc = acc * (xi - MultiPoly.variable(p + j, n, ring))
    return acc


def resultant_symmetry_check(first: MonicPoly, second: MonicPoly) -> bool:
    """Whether N_P(Q) equals (-1)^(pq) N_Q(P); expected true always."""
    if first.ring != second.ring:
        raise RingMismatchError(
            f"mixed rings {first.ring.name} and {second.ring.name}"
        )
    p, q = first.degree, second.degree
    lhs = norm(second.poly, first)
    rhs = norm(first.poly, second)
    if (p * q) % 2:
        rhs = -rhs
    return lhs == rhs


def push_norm(hom: RingHom, f: Poly, modulus: MonicPoly) -> tuple[RingValue, RingValue]:
    """(phi(N_F(f)), N_{F^phi}(f^phi)): equal by base change.

    Also verifies the stronger per-coefficient statement: applying phi
    to each signed coefficient of the multiplication characteristic
    polynomial lands on the corresponding coefficient downstairs.
    """
    if modulus.ring != hom.source or f.ring != hom.source:
        raise RingMismatchError(
            f"inputs must be over the source ring {hom.source.name}"
        )
    f_img = hom.map_poly(f)
    modulus_img = hom.map_monic(modulus)

    upstairs = mult_char_poly(f, modulus)
    downstairs = mult_char_poly(f_img, modulus_img)
    pushed = [hom(c) for c in upstairs.signed_coeffs]
    if tuple(pushed) != downstairs.signed_coeffs:
        raise InvariantViolationError(
            f"coefficient base change failed for f={f}, F={modulus},"
            f" hom={hom.describe()}"
        )
    return hom(norm(f, modulus)), norm(f_img, modulus_img)
