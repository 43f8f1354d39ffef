from fractions import Fraction
from unittest import TestCase, main

from hypothesis import given, settings
from hypothesis import strategies as st

from groebner.exceptions import PolynomialParseError, RingMismatchError, \
    ZeroPolynomialError
from groebner.polynomial import PolynomialRing

RING = PolynomialRing('Q', ('x', 'y', 'z'))

exponents = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polynomials = st.dictionaries(exponents, st.integers(-5, 5),
                              max_size=5).map(RING.from_dict)


class PolynomialRingTests(TestCase):
    """
    Tests ring construction and the generators of a ring
    """

    def test_rings_compare_by_field_variables_and_order(self):
        self.assertEqual(RING, PolynomialRing('Q', ('x', 'y', 'z')))
        self.assertNotEqual(RING, PolynomialRing('Fp:7', ('x', 'y', 'z')))
        self.assertNotEqual(RING, RING.with_variables(('y', 'x', 'z')))

    def test_duplicate_variables(self):
        with self.assertRaises(ValueError):
            PolynomialRing('Q', ('x', 'x'))

    def test_generators(self):
        x, y, z = RING.gens()
        self.assertEqual(x.leading_monomial(), (1, 0, 0))
        self.assertEqual(RING.gen('z'), z)
        self.assertEqual(RING.one, 1)
        self.assertTrue(RING.zero.is_zero())
        self.assertEqual(RING.zero.degree(), -1)


class PolynomialStructureTests(TestCase):
    """
    Tests the term layout, grevlex order and the structural queries
    """

    def test_grevlex_leading_term(self):
        f = RING.parse('x^2 + x*y^2 + x^2*y')
        self.assertEqual(f.leading_monomial(), (2, 1, 0))
        self.assertEqual(f.degree(), 3)
        # among monomials of equal degree the last variable loses
        g = RING.parse('x*z + y^2')
        self.assertEqual(g.leading_monomial(), (0, 2, 0))

    def test_leading_term_of_zero(self):
        with self.assertRaises(ZeroPolynomialError):
            RING.zero.leading_term()

    def test_homogeneity(self):
        self.assertTrue(RING.parse('x^2 - 3*y*z').is_homogeneous())
        self.assertFalse(RING.parse('x^2 - y^3').is_homogeneous())
        self.assertTrue(RING.zero.is_homogeneous())

    def test_constant_and_linear_parts(self):
        f = RING.parse('3 + 2*x - z + x*y')
        self.assertEqual(f.constant_term(), 3)
        self.assertEqual(dict(f.linear_part()), {0: 2, 2: -1})
        self.assertEqual(f.support(), frozenset({0, 1, 2}))
        self.assertEqual(RING.parse('x*y').variables(), ('x', 'y'))

    def test_str_follows_the_grammar(self):
        f = RING.parse('x^2*y - 1/2*z + 3')
        self.assertEqual(str(f), 'x^2*y - 1/2*z + 3')
        self.assertEqual(RING.parse(str(f)), f)
        self.assertEqual(str(RING.zero), '0')

    def test_parse_errors(self):
        with self.assertRaises(PolynomialParseError):
            RING.parse('x + w')
        with self.assertRaises(PolynomialParseError):
            RING.parse('x + (y')
        with self.assertRaises(PolynomialParseError):
            RING.parse('x = y')
        with self.assertRaises(PolynomialParseError):
            RING.parse('  ')


class PolynomialArithmeticTests(TestCase):
    """
    Tests ring arithmetic, substitution and changes of ring
    """

    def test_arithmetic(self):
        x, y, _ = RING.gens()
        self.assertEqual((x + y) ** 2, RING.parse('x^2 + 2*x*y + y^2'))
        self.assertEqual((x + y) * (x - y), RING.parse('x^2 - y^2'))
        self.assertEqual(x - x, RING.zero)
        self.assertEqual((x * 2).scale(Fraction(1, 2)), x)
        self.assertEqual(1 - x, RING.parse('-x + 1'))

    def test_substitute(self):
        f = RING.parse('x^2 + y*z')
        y = RING.gen('y')
        self.assertEqual(f.substitute({'x': y, 'z': 0}), RING.parse('y^2'))

    def test_to_ring(self):
        small = PolynomialRing('Q', ('y',))
        f = small.parse('y^3 - y')
        self.assertEqual(f.to_ring(RING), RING.parse('y^3 - y'))
        with self.assertRaises(RingMismatchError):
            RING.parse('x').to_ring(small)

    def test_rename(self):
        target = PolynomialRing('Q', ('a', 'y', 'z'))
        f = RING.parse('x^2*y')
        self.assertEqual(f.rename({'x': 'a'}, target), target.parse('a^2*y'))

    def test_mixing_rings(self):
        other = PolynomialRing('Fp:7', ('x', 'y', 'z'))
        with self.assertRaises(RingMismatchError):
            RING.gen('x') + other.gen('x')

    def test_modular_coefficients(self):
        ring = PolynomialRing('Fp:7', ('x',))
        x = ring.gen('x')
        self.assertEqual((x + 1) ** 7, x ** 7 + 1)

    @settings(max_examples=40, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_ring_axioms(self, f, g, h):
        self.assertEqual(f * g, g * f)
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertEqual((f + g) - g, f)

    @settings(max_examples=40, deadline=None)
    @given(polynomials, polynomials)
    def test_degree_of_product(self, f, g):
        if f and g:
            self.assertEqual((f * g).degree(), f.degree() + g.degree())
            self.assertEqual((f * g).leading_monomial(),
                             tuple(a + b for a, b in
                                   zip(f.leading_monomial(),
                                       g.leading_monomial())))


if __name__ == '__main__':
    main()
