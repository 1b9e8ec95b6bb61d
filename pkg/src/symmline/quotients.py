"""Free rank-n quotients of localized polynomial rings, and point counts.

A multiplicatively closed subset U of A[X] is described by a MultSet:
trivial {1}, finitely generated, the local set {f : f(a) is a unit}, or
all nonzero polynomials over a domain.  A monic F of degree n is
admissible for U exactly when every element of U has unit norm with
respect to F, which by norm multiplicativity only needs checking on
generators.  The admissible F are precisely the monic generators of
ideals with free rank-n quotient, so counting them over GF(q) counts
the GF(q)-points of the corresponding parameter scheme.

free_quotient_oracle decides the same membership by exhaustive search
for an inverse residue, touching neither norms nor determinants; it is
the independent route the criterion is tested against.

The addition map sends the symmetric ring on n letters to the symmetric
ring on n-1 letters tensored with one polynomial factor, on the basis
symbols e_i -> e_i + e_(i-1)*X (with e_0 = 1 and e_n = 0 downstairs).
Its section recovers e_i upstairs recursively, and its kernel contains
the generic monic polynomial of sym_char_poly(X, n).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import product

from .errors import (
    InvariantViolationError,
    OracleInfeasibleError,
    RingMismatchError,
    UnsupportedRingError,
)
from .matrices import SquareMatrix, char_poly, poly_at_matrix
from .norms import norm
from .poly import MonicPoly, Poly
from .rings import PrimeField, Ring, RingValue, ZmodRing, ZZ
from .symmetric import (
    SymElem,
    SymPoly1,
    diagonal_tensor,
    sym_char_poly,
    sym_ops_of,
)

ORACLE_SEARCH_BOUND = 100_000
CENSUS_BOUND = 1_000_000


class MultSet:
    """A multiplicatively closed subset of the polynomial ring."""

    __slots__ = ("ring", "kind", "gens", "point")

    def __init__(self, ring: Ring, kind: str, gens=(), point=None):
        self.ring = ring
        self.kind = kind
        self.gens = tuple(gens)
        self.point = point

    @classmethod
    def trivial(cls, ring: Ring) -> MultSet:
        return cls(ring, "trivial")

    @classmethod
    def generated(cls, *gens: Poly) -> MultSet:
        if not gens:
            raise ValueError("need at least one generator")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators over different rings")
            if g.is_zero:
                raise ValueError("generators must be nonzero")
        return cls(ring, "generated", gens)

    @classmethod
    def local_at(cls, point: RingValue) -> MultSet:
        return cls(point.ring, "local-at", point=point)

    @classmethod
    def all_nonzero(cls, ring: Ring) -> MultSet:
        if not ring.is_domain:
            raise UnsupportedRingError(
                f"all-nonzero needs an integral domain, got {ring.name}"
            )
        return cls(ring, "all-nonzero")

    def diagonal_power(self, n: int) -> list[SymElem]:
        """Diagonal tensors of the generators: the generators of the
        diagonal image of this set in the symmetric ring (together with
        1, which the closure always contains)."""
        if self.kind == "trivial":
            return []
        if self.kind == "generated":
            return [diagonal_tensor(g, n) for g in self.gens]
        raise UnsupportedRingError(
            f"diagonal generators are not finitely presented for {self.kind}"
        )

    def describe(self) -> str:
        if self.kind == "generated":
            return "gens:" + ",".join(str(g) for g in self.gens)
        if self.kind == "local-at":
            return f"local-at:{self.point}"
        return self.kind

    def __repr__(self):
        return f"MultSet({self.ring.name}, {self.describe()})"


def is_free_quotient(modulus: MonicPoly, mult_set: MultSet) -> bool:
    """Whether A[X]/(F) maps isomorphically onto A[X]_U/(F): the norm
    of every element of U is a unit, decided on generators."""
    if modulus.ring != mult_set.ring:
        raise RingMismatchError(
            f"F over {modulus.ring.name}, set over {mult_set.ring.name}"
        )
    ring = modulus.ring
    if mult_set.kind == "trivial":
        return True
    if mult_set.kind == "generated":
        return all(norm(g, modulus).is_unit() for g in mult_set.gens)
    if mult_set.kind == "local-at":
        if not ring.is_field:
            raise UnsupportedRingError(
                "local-at membership is only decidable over a field base"
            )
        target = MonicPoly.from_roots(ring, [mult_set.point] * modulus.degree)
        return modulus == target
    if mult_set.kind == "all-nonzero":
        # F itself lies in U and has norm zero
        return False
    raise ValueError(f"unknown kind {mult_set.kind!r}")


def free_quotient_oracle(
    modulus: MonicPoly, mult_set: MultSet, bound: int = ORACLE_SEARCH_BOUND
) -> bool:
    """Exhaustive-search route for the same membership: every generator
    must have an inverse residue modulo F, found by trying all of them.

    Only finite modular bases and finitely generated sets are in range;
    independent of norms, determinants, and symmetric functions.
    """
    ring = modulus.ring
    if not isinstance(ring, ZmodRing):
        raise UnsupportedRingError(
            f"oracle needs a finite modular base, got {ring.name}"
        )
    if mult_set.kind != "generated":
        raise UnsupportedRingError(
            f"oracle needs a finitely generated set, got {mult_set.kind}"
        )
    if mult_set.ring != ring:
        raise RingMismatchError("set and polynomial over different rings")
    m = ring.modulus
    n = modulus.degree
    if m**n > bound:
        raise OracleInfeasibleError(
            f"{m}^{n} residues exceed the search bound {bound}"
        )
    fc = [c.payload for c in modulus.poly.coeffs]
    for g in mult_set.gens:
        gc = _int_mod([c.payload for c in g.coeffs], fc, n, m)
        if not _has_inverse(gc, fc, n, m):
            return False
    return True


def _int_mod(coeffs, fc, n, m):
    """Reduce an int coefficient list modulo the monic fc, mod m."""
    rem = [c % m for c in coeffs]
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if c:
            for i in range(n + 1):
                rem[k - n + i] = (rem[k - n + i] - c * fc[i]) % m
    rem = rem[:n]
    rem += [0] * (n - len(rem))
    return rem


def _has_inverse(gc, fc, n, m):
    for cand in product(range(m), repeat=n):
        prod_len = 2 * n - 1
        acc = [0] * prod_len
        for i, a in enumerate(gc):
            if a:
                for j, b in enumerate(cand):
                    if b:
                        acc[i + j] = (acc[i + j] + a * b) % m
        acc = _int_mod(acc, fc, n, m)
        if acc[0] == 1 and all(c == 0 for c in acc[1:]):
            return True
    return False


def recover_monic(theta: SquareMatrix) -> MonicPoly:
    """The unique monic polynomial generating the kernel of the natural
    map onto a free rank-n quotient whose X-action is theta: its
    characteristic polynomial.  Verifies F(theta) = 0 before returning."""
    result = char_poly(theta)
    value = poly_at_matrix(result.poly, theta)
    if value != SquareMatrix.zero(theta.ring, theta.n):
        raise InvariantViolationError(
            f"characteristic polynomial does not annihilate {theta}"
        )
    return result


def _addition_images(ring: Ring, n: int) -> list[SymPoly1]:
    """Images of e_1..e_n downstairs: e_i + e_(i-1)*X in arity n-1."""
    images = []
    for i in range(1, n + 1):
        const = (
            SymElem.e(i, n - 1, ring)
            if i <= n - 1
            else SymElem.zero(ring, n - 1)
        )
        linear = SymElem.e(i - 1, n - 1, ring)
        images.append(SymPoly1(ring, n - 1, (const, linear)))
    return images


def addition_map(s: SymElem) -> SymPoly1:
    """Apply the addition homomorphism to an arity-n symmetric element;
    the result has symmetric coefficients of arity n-1."""
    n = s.arity
    if n < 1:
        raise ValueError("arity must be >= 1")
    ring = s.ring
    images = _addition_images(ring, n)
    acc = SymPoly1.zero(ring, n - 1)
    for expo, c in s.terms.items():
        term = SymPoly1(ring, n - 1, (SymElem.constant(ring, n - 1, c),))
        for i, k in enumerate(expo):
            if k:
                term = term * images[i] ** k
        acc = acc + term
    return acc


def apply_addition(t: SymPoly1) -> SymPoly1:
    """Extend the addition map X-linearly to polynomials in the outer X."""
    n = t.arity
    acc = SymPoly1.zero(t.ring, n - 1)
    for j, c in enumerate(t.coeffs):
        acc = acc + addition_map(c).shift(j)
    return acc


def section_map(t: SymPoly1) -> SymPoly1:
    """The recursive section of the addition map: on basis symbols,
    p(e_i) = e_i' - p(e_(i-1))*X, raising arity by one."""
    k = t.arity
    ring = t.ring
    images = [SymPoly1(ring, k + 1, (SymElem.one(ring, k + 1),))]
    x = SymPoly1.x(ring, k + 1)
    for i in range(1, k + 1):
        upstairs = SymPoly1.from_symelem(SymElem.e(i, k + 1, ring))
        images.append(upstairs - images[i - 1] * x)
    acc = SymPoly1.zero(ring, k + 1)
    for j, c in enumerate(t.coeffs):
        for expo, coeff in c.terms.items():
            term = SymPoly1(
                ring, k + 1, (SymElem.constant(ring, k + 1, coeff),)
            )
            for i, e in enumerate(expo):
                if e:
                    term = term * images[i + 1] ** e
            acc = acc + term.shift(j)
    return acc


def addition_kernel_check(n: int, ring: Ring = ZZ) -> bool:
    """Whether the generic monic polynomial of degree n dies under the
    addition map, the computation behind the kernel statement."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    generic = sym_char_poly(Poly.gen(ring), n)
    return apply_addition(generic).is_zero


def addition_diagonal_check(f: Poly, n: int) -> bool:
    """Whether the addition map carries the diagonal tensor of f to the
    one-variable-shorter diagonal tensor times f(X), and likewise each
    symmetric operator to s_i' + s_(i-1)'*f(X)."""
    if n < 2:
        raise ValueError("need arity >= 2")
    ring = f.ring
    lhs = addition_map(diagonal_tensor(f, n))
    rhs = SymPoly1.lift_poly(f, n - 1).scale(diagonal_tensor(f, n - 1))
    if lhs != rhs:
        return False
    ops_hi = sym_ops_of(f, n)
    ops_lo = sym_ops_of(f, n - 1)
    f_lift = SymPoly1.lift_poly(f, n - 1)
    for i in range(1, n + 1):
        left = addition_map(ops_hi[i - 1])
        const = (
            SymPoly1.from_symelem(ops_lo[i - 1])
            if i <= n - 1
            else SymPoly1.zero(ring, n - 1)
        )
        prev = ops_lo[i - 2] if i >= 2 else SymElem.one(ring, n - 1)
        if left != const + f_lift.scale(prev):
            return False
    return True


def count_points(
    q: int,
    n: int,
    mult_set: MultSet,
    workers: int = 1,
    bound: int = CENSUS_BOUND,
) -> int:
    """Number of monic degree-n polynomials over GF(q) that generate a
    free rank-n quotient of the localization at the given set."""
    ring = PrimeField(q)
    if mult_set.ring != ring:
        raise RingMismatchError(
            f"set over {mult_set.ring.name}, census over {ring.name}"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    total = q**n
    if total > bound:
        raise OracleInfeasibleError(
            f"{q}^{n} polynomials exceed the census bound {bound}"
        )

    def count_range(start: int, stop: int) -> int:
        count = 0
        for idx in range(start, stop):
            coeffs = []
            v = idx
            for _ in range(n):
                v, r = divmod(v, q)
                coeffs.append(r)
            coeffs.append(1)
            modulus = MonicPoly(Poly(ring, coeffs))
            if is_free_quotient(modulus, mult_set):
                count += 1
        return count

    if workers <= 1:
        return count_range(0, total)
    # deterministic: fixed chunking, summed in chunk order
    step = (total + workers - 1) // workers
    spans = [(s, min(s + step, total)) for s in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda span: count_range(*span), spans))
    return sum(results)
