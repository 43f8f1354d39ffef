from unittest import TestCase, main

from hypothesis import given, settings
from hypothesis import strategies as st

from groebner.buchberger import buchberger, groebner_basis
from groebner.exceptions import OrderMismatchError
from groebner.ideal import Ideal
from groebner.orders import MonomialOrder
from groebner.polynomial import PolynomialRing

RING = PolynomialRing('Q', ('x', 'y', 'z'))
TWISTED = [RING.parse('x^2 - y*z'), RING.parse('y^2 - x*z')]

exponents = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polynomials = st.dictionaries(exponents, st.integers(-4, 4),
                              max_size=4).map(RING.from_dict)
multilinear = st.dictionaries(
    st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)),
    st.integers(-3, 3), max_size=3).map(RING.from_dict)


class GroebnerBasisTests(TestCase):
    """
    Tests reduced Groebner bases on small ideals with known answers
    """

    def setUp(self):
        self.ring = PolynomialRing('Q', ('x', 'y'))
        self.ideal = Ideal.parse(self.ring, ['x^2 + y', 'x*y'])

    def test_reduced_basis(self):
        basis = self.ideal.groebner_basis()
        expected = tuple(self.ring.parse(t) for t in ('x^2 + y', 'x*y', 'y^2'))
        self.assertEqual(basis.elements, expected)
        self.assertEqual(basis.leading_monomials(), ((2, 0), (1, 1), (0, 2)))

    def test_same_basis_over_a_finite_field(self):
        ring = PolynomialRing('Fp:7', ('x', 'y'))
        basis = Ideal.parse(ring, ['x^2 + y', 'x*y']).groebner_basis()
        self.assertEqual(len(basis), 3)
        self.assertEqual(basis.leading_monomials(), ((2, 0), (1, 1), (0, 2)))

    def test_membership_and_normal_form(self):
        basis = self.ideal.groebner_basis()
        parse = self.ring.parse
        self.assertTrue(basis.contains(parse('x^3')))
        self.assertTrue(basis.contains(parse('y^2')))
        self.assertFalse(basis.contains(parse('y')))
        self.assertEqual(basis.normal_form(parse('x^3 + y')), parse('y'))
        self.assertIn(parse('x^2*y'), self.ideal)

    def test_standard_monomials(self):
        basis = self.ideal.groebner_basis()
        self.assertTrue(basis.is_standard((0, 1)))
        self.assertTrue(basis.is_standard((1, 0)))
        self.assertFalse(basis.is_standard((1, 1)))

    def test_unit_and_zero_ideals(self):
        unit = Ideal.parse(self.ring, ['x', 'x - 1']).groebner_basis()
        self.assertTrue(unit.is_unit())
        self.assertEqual(unit.elements, (self.ring.one,))
        zero = Ideal(self.ring, [self.ring.zero]).groebner_basis()
        self.assertTrue(zero.is_zero())
        self.assertFalse(zero.contains(self.ring.one))

    def test_order_mismatch(self):
        basis = self.ideal.groebner_basis()
        lex = self.ring.with_order(MonomialOrder.lex())
        with self.assertRaises(OrderMismatchError):
            basis.normal_form(lex.parse('x'))

    def test_lex_basis(self):
        ideal = Ideal.parse(self.ring, ['x - y^2', 'y^3 - 1'])
        basis = buchberger(ideal, MonomialOrder.lex())
        self.assertEqual(basis.ring.order, MonomialOrder.lex())
        lex = basis.ring
        self.assertEqual(basis.elements,
                         (lex.parse('x - y^2'), lex.parse('y^3 - 1')))

    def test_empty_generator_list(self):
        with self.assertRaises(ValueError):
            groebner_basis([])

    def test_cached(self):
        first = Ideal(RING, TWISTED).groebner_basis()
        second = Ideal(RING, list(reversed(TWISTED))).groebner_basis()
        self.assertIs(first, second)


class GroebnerPropertyTests(TestCase):
    """
    Property tests on random combinations of fixed generators
    """

    @settings(max_examples=40, deadline=None)
    @given(polynomials, polynomials)
    def test_combinations_are_members(self, f, g):
        basis = Ideal(RING, TWISTED).groebner_basis()
        self.assertTrue(basis.contains(f * TWISTED[0] + g * TWISTED[1]))

    @settings(max_examples=25, deadline=None)
    @given(polynomials)
    def test_redundant_generators_do_not_change_the_basis(self, f):
        basis = Ideal(RING, TWISTED).groebner_basis()
        extended = Ideal(RING, TWISTED + [f * TWISTED[0] + TWISTED[1]])
        self.assertEqual(extended.groebner_basis(), basis)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(multilinear, min_size=1, max_size=2))
    def test_elements_are_monic(self, generators):
        basis = Ideal(RING, generators).groebner_basis()
        for element in basis:
            self.assertEqual(element.leading_coefficient(), 1)
        for g in generators:
            self.assertTrue(basis.contains(g))


if __name__ == '__main__':
    main()
