from random import Random

from symmline.matrices import (
    SquareMatrix,
    char_poly,
    companion_matrix,
    det,
    mult_matrix,
    poly_at_matrix,
)
from symmline.oracles import charpoly_cofactor, leibniz_det
from symmline.poly import MonicPoly, Poly, PolyRing, poly_divmod
from symmline.rings import GF, QQ, Zmod, ZZ
from symmline.sampling import random_monic, random_poly, random_value

RINGS = [ZZ, QQ, Zmod(12), GF(7)]


def mat(ring, rows):
    return SquareMatrix(ring, rows)


def test_companion_worked_example():
    f = MonicPoly(Poly(ZZ, [2, -3, 1]))
    assert companion_matrix(f) == mat(ZZ, [[0, -2], [1, 3]])


def test_companion_degree_one():
    f = MonicPoly(Poly(ZZ, [-5, 1]))  # X - 5
    assert companion_matrix(f) == mat(ZZ, [[5]])


def test_companion_charpoly_roundtrip():
    rng = Random(11)
    for ring in RINGS:
        for _ in range(25):
            f = random_monic(ring, rng, rng.randint(1, 6))
            assert char_poly(companion_matrix(f)) == f


def test_charpoly_zero_matrix():
    for n in range(1, 5):
        cp = char_poly(SquareMatrix.zero(ZZ, n))
        assert cp.poly == Poly.gen(ZZ) ** n


def test_charpoly_2x2_formula():
    rng = Random(12)
    for _ in range(30):
        a, b, c, d = (rng.randint(-9, 9) for _ in range(4))
        cp = char_poly(mat(ZZ, [[a, b], [c, d]]))
        assert cp.poly == Poly(ZZ, [a * d - b * c, -(a + d), 1])


def test_charpoly_matches_cofactor_expansion():
    rng = Random(13)
    for ring in (ZZ, Zmod(6), Zmod(12)):
        for n in range(1, 5):
            for _ in range(8):
                m = mat(
                    ring,
                    [
                        [random_value(ring, rng) for _ in range(n)]
                        for _ in range(n)
                    ],
                )
                assert char_poly(m) == charpoly_cofactor(m)


def test_det_identity():
    for n in range(1, 5):
        assert det(SquareMatrix.identity(ZZ, n)) == ZZ.one


def test_det_worked_example():
    m = mat(ZZ, [[0, -2], [1, 3]])
    assert det(m) == ZZ.value(2)
    assert det(m) == leibniz_det(m)


def test_det_multiplicative_mod9():
    rng = Random(14)
    ring = Zmod(9)
    for _ in range(25):
        a = mat(ring, [[random_value(ring, rng) for _ in range(3)] for _ in range(3)])
        b = mat(ring, [[random_value(ring, rng) for _ in range(3)] for _ in range(3)])
        assert det(a * b) == det(a) * det(b)


def test_det_matches_leibniz():
    rng = Random(15)
    for ring in RINGS:
        for n in range(1, 5):
            for _ in range(6):
                m = mat(
                    ring,
                    [
                        [random_value(ring, rng) for _ in range(n)]
                        for _ in range(n)
                    ],
                )
                assert det(m) == leibniz_det(m)


def test_mult_matrix_one_is_identity():
    f = random_monic(ZZ, Random(16), 4)
    assert mult_matrix(Poly(ZZ, [1]), f) == SquareMatrix.identity(ZZ, 4)


def test_mult_matrix_x_is_companion():
    rng = Random(17)
    for _ in range(15):
        f = random_monic(ZZ, rng, rng.randint(1, 5))
        assert mult_matrix(Poly.gen(ZZ), f) == companion_matrix(f)


def test_mult_matrix_columns_definition():
    f = MonicPoly(Poly(ZZ, [2, -3, 1]))
    g = Poly(ZZ, [1, 1])  # X + 1
    m = mult_matrix(g, f)
    x = Poly.gen(ZZ)
    for j in range(2):
        col = poly_divmod(g * x**j, f)[1]
        assert list(m.column(j)) == [col.coeff(i) for i in range(2)]


def test_mult_matrix_is_ring_homomorphism():
    rng = Random(18)
    for ring in (ZZ, Zmod(12)):
        for _ in range(20):
            modulus = random_monic(ring, rng, rng.randint(1, 4))
            f = random_poly(ring, rng, 3)
            g = random_poly(ring, rng, 3)
            assert mult_matrix(f * g, modulus) == mult_matrix(
                f, modulus
            ) * mult_matrix(g, modulus)
            assert mult_matrix(f + g, modulus) == mult_matrix(
                f, modulus
            ) + mult_matrix(g, modulus)


def test_cayley_hamilton():
    rng = Random(19)
    rings = RINGS + [PolyRing(ZZ, "T")]
    for ring in rings:
        sizes = range(1, 6) if not isinstance(ring, PolyRing) else range(1, 4)
        for n in sizes:
            for _ in range(3):
                m = mat(
                    ring,
                    [
                        [random_value(ring, rng, -4, 4) for _ in range(n)]
                        for _ in range(n)
                    ],
                )
                cp = char_poly(m)
                assert poly_at_matrix(cp.poly, m) == SquareMatrix.zero(ring, n)


def test_spectral_mapping():
    # split modulus: char poly of f(M) is the product over mapped roots
    rng = Random(20)
    for ring in (ZZ, GF(7)):
        for _ in range(25):
            n = rng.randint(1, 4)
            roots = [random_value(ring, rng, -5, 5) for _ in range(n)]
            m = companion_matrix(MonicPoly.from_roots(ring, roots))
            f = random_poly(ring, rng, 3)
            expected = MonicPoly.from_roots(ring, [f(a) for a in roots])
            assert char_poly(poly_at_matrix(f, m)) == expected
