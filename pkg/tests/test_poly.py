from random import Random

import pytest

from symmline.errors import NotInvertibleError, UnsupportedRingError
from symmline.poly import (
    MonicPoly,
    Poly,
    PolyRing,
    QuotientElem,
    invert_mod,
    poly_divmod,
    poly_gcd,
)
from symmline.rings import GF, QQ, Zmod, ZZ
from symmline.sampling import random_monic, random_poly


def p(ring, *coeffs):
    """Ascending-coefficient shorthand."""
    return Poly(ring, coeffs)


def test_degree_of_zero_is_none():
    assert Poly.zero(ZZ).degree is None
    assert p(ZZ, 0, 0).degree is None
    assert p(ZZ, 5).degree == 0
    assert Poly.gen(ZZ).degree == 1


def test_divmod_worked_example():
    # X^3 = (X + 3)(X^2 - 3X + 2) + (7X - 6), verified by multiplying back
    g = MonicPoly(p(ZZ, 2, -3, 1))
    f = Poly.gen(ZZ) ** 3
    q, r = poly_divmod(f, g)
    assert q == p(ZZ, 3, 1)
    assert r == p(ZZ, -6, 7)
    assert q * g.poly + r == f


def test_divmod_self():
    g = MonicPoly(p(ZZ, 2, -3, 1))
    q, r = poly_divmod(g.poly, g)
    assert q == p(ZZ, 1)
    assert r.is_zero


def test_divmod_low_degree():
    g = MonicPoly(p(ZZ, 2, -3, 1))
    q, r = poly_divmod(p(ZZ, 5), g)
    assert q.is_zero
    assert r == p(ZZ, 5)


def test_divmod_roundtrip_random():
    rng = Random(3)
    for ring in (ZZ, Zmod(12), GF(5), QQ):
        for _ in range(40):
            f = random_poly(ring, rng, 7)
            g = random_monic(ring, rng, rng.randint(1, 4))
            q, r = poly_divmod(f, g)
            assert q * g.poly + r == f
            assert r.is_zero or r.degree < g.degree


def test_divmod_requires_monic():
    with pytest.raises(ValueError):
        poly_divmod(Poly.gen(ZZ), MonicPoly(p(ZZ, 1)))  # degree 0
    with pytest.raises(ValueError):
        poly_divmod(Poly.gen(ZZ), p(ZZ, 1, 2))


def test_monic_validation():
    with pytest.raises(ValueError):
        MonicPoly(p(ZZ, 1, 2))
    with pytest.raises(ValueError):
        MonicPoly(p(ZZ, 7))
    MonicPoly(p(Zmod(6), 5, 1))


def test_signed_coeff_view_roundtrip():
    rng = Random(4)
    f = MonicPoly(p(ZZ, 2, -3, 1))
    assert [c.payload for c in f.signed_coeffs] == [3, 2]
    for ring in (ZZ, Zmod(9), GF(7)):
        for _ in range(30):
            g = random_monic(ring, rng, rng.randint(1, 6))
            back = MonicPoly.from_signed_coeffs(ring, g.signed_coeffs)
            assert back == g


def test_from_roots():
    f = MonicPoly.from_roots(ZZ, [ZZ.value(1), ZZ.value(2)])
    assert f.poly == p(ZZ, 2, -3, 1)


def test_evaluate():
    f = p(ZZ, 2, -3, 1)
    assert f(ZZ.value(1)) == ZZ.zero
    assert f(ZZ.value(4)) == ZZ.value(6)


def test_invert_mod_worked_example():
    ring = GF(5)
    modulus = MonicPoly(p(ring, 1, 0, 1))  # X^2 + 1
    h = invert_mod(Poly.gen(ring), modulus)
    assert h == QuotientElem(modulus, p(ring, 0, 4))
    # X * 4X = 4X^2 = 4(X^2 + 1) - 4 = 1 mod X^2 + 1
    product = poly_divmod(Poly.gen(ring) * h.rep, modulus)[1]
    assert product == p(ring, 1)


def test_invert_mod_one():
    ring = GF(5)
    modulus = MonicPoly(p(ring, 1, 0, 1))
    assert invert_mod(p(ring, 1), modulus).rep == p(ring, 1)


def test_invert_mod_common_factor():
    ring = GF(5)
    with pytest.raises(NotInvertibleError):
        invert_mod(Poly.gen(ring), MonicPoly(p(ring, 0, 0, 1)))


def test_invert_mod_needs_field():
    with pytest.raises(UnsupportedRingError):
        invert_mod(Poly.gen(ZZ), MonicPoly(p(ZZ, 1, 1)))


def test_invert_mod_random_is_inverse():
    rng = Random(5)
    for ring in (GF(5), GF(7), QQ):
        for _ in range(25):
            modulus = random_monic(ring, rng, rng.randint(1, 4))
            f = random_poly(ring, rng, 3)
            if f.is_zero or poly_gcd(f, modulus.poly).degree != 0:
                continue
            h = invert_mod(f, modulus)
            assert poly_divmod(f * h.rep, modulus)[1] == p(ring, 1)


def test_gcd_basics():
    ring = GF(5)
    x = Poly.gen(ring)
    f = (x - p(ring, 1)) * (x - p(ring, 2))
    g = (x - p(ring, 1)) * (x - p(ring, 3))
    assert poly_gcd(f, g) == x - p(ring, 1)
    assert poly_gcd(f, Poly.zero(ring)) == f.scale(f.leading.try_inverse())


def test_tower_polynomials():
    tower = PolyRing(ZZ, "T")
    t = tower.gen()
    f = Poly(tower, [-t, tower.one])  # X - T
    assert f.degree == 1
    assert str(f) == "X - T"
    value = f(tower.value(Poly.gen(ZZ)))
    assert value == tower.zero


def test_render_descending():
    assert str(p(ZZ, 2, -3, 1)) == "X^2 - 3*X + 2"
    assert str(Poly.zero(ZZ)) == "0"
    assert str(p(ZZ, 0, 1)) == "X"
    assert str(p(ZZ, -7)) == "-7"
    assert str(p(Zmod(12), 2, 9, 1)) == "X^2 + 9*X + 2"


def test_quotient_elem_reduces_representative():
    g = MonicPoly(p(ZZ, 2, -3, 1))
    q = QuotientElem(g, Poly.gen(ZZ) ** 5)
    assert q.rep.degree < g.degree
    assert q == QuotientElem(g, poly_divmod(Poly.gen(ZZ) ** 5, g)[1])


def test_monic_from_signed_definition():
    # X^4 - c1 X^3 + c2 X^2 - c3 X + c4
    f = MonicPoly.from_signed_coeffs(ZZ, [1, 2, 3, 4])
    assert f.poly == p(ZZ, 4, -3, 2, -1, 1)
