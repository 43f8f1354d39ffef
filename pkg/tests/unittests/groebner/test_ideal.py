import random
from unittest import TestCase, main

from groebner.buchberger import buchberger
from groebner.exceptions import NotDivisibleError, RingMismatchError
from groebner.ideal import Ideal, colon, eliminate, exact_quotient, \
    ideal_product, ideal_sum, intersection, maximal_ideal, power
from groebner.orders import MonomialOrder
from groebner.polynomial import PolynomialRing


class IdealMembershipTests(TestCase):
    """
    Tests containment, equality as ideals and ring checks
    """

    def setUp(self):
        self.ring = PolynomialRing('Q', ('x', 'y'))

    def test_zero_generators_are_dropped(self):
        ideal = Ideal(self.ring, [self.ring.zero, self.ring.parse('x')])
        self.assertEqual(len(ideal), 1)
        self.assertTrue(Ideal(self.ring, [self.ring.zero]).is_zero())

    def test_foreign_generator(self):
        other = PolynomialRing('Q', ('x', 'z'))
        with self.assertRaises(RingMismatchError):
            Ideal(self.ring, [other.gen('z')])

    def test_equals_ignores_generators(self):
        a = Ideal.parse(self.ring, ['x^2', 'x*y', 'y^2'])
        b = Ideal.parse(self.ring, ['y^2', 'x^2 + x*y', 'x*y'])
        self.assertTrue(a.equals(b))
        self.assertNotEqual(a, b)
        self.assertTrue(power(maximal_ideal(self.ring), 2).equals(a))

    def test_issubset(self):
        small = Ideal.parse(self.ring, ['x^2', 'x*y'])
        big = Ideal.parse(self.ring, ['x'])
        self.assertTrue(small.issubset(big))
        self.assertFalse(big.issubset(small))

    def test_unit(self):
        self.assertTrue(Ideal.parse(self.ring, ['x', 'x + 1']).is_unit())
        self.assertFalse(maximal_ideal(self.ring).is_unit())


class IdealOperationTests(TestCase):
    """
    Tests sums, products, intersections, colons and elimination
    """

    def setUp(self):
        self.ring = PolynomialRing('Q', ('x', 'y'))
        self.x = Ideal.parse(self.ring, ['x'])
        self.y = Ideal.parse(self.ring, ['y'])

    def test_sum_and_product(self):
        self.assertTrue(ideal_sum(self.x, self.y).equals(
            maximal_ideal(self.ring)))
        self.assertTrue(ideal_product(self.x, self.y).equals(
            Ideal.parse(self.ring, ['x*y'])))
        self.assertTrue((self.x + self.y).equals(maximal_ideal(self.ring)))
        self.assertTrue(power(self.x, 0).is_unit())

    def test_intersection(self):
        meet = intersection(self.x, self.y)
        self.assertTrue(meet.equals(Ideal.parse(self.ring, ['x*y'])))
        square = Ideal.parse(self.ring, ['x^2', 'y'])
        self.assertTrue(self.x.intersection(square).equals(
            Ideal.parse(self.ring, ['x^2', 'x*y'])))

    def test_colon(self):
        ideal = Ideal.parse(self.ring, ['x^2', 'x*y'])
        self.assertTrue(colon(ideal, self.x).equals(maximal_ideal(self.ring)))
        self.assertTrue(ideal.colon(self.y).equals(self.x))
        unit = Ideal(self.ring, [self.ring.one])
        self.assertTrue(colon(ideal, unit).equals(ideal))
        # the socle of k[x, y]/(x^2, x*y, y^2) is the whole maximal ideal
        square = power(maximal_ideal(self.ring), 2)
        self.assertTrue(colon(square, maximal_ideal(self.ring)).equals(
            maximal_ideal(self.ring)))

    def test_colon_by_empty_ideal(self):
        ideal = Ideal.parse(self.ring, ['x^2'])
        self.assertTrue(colon(ideal, Ideal(self.ring)).is_unit())

    def test_eliminate(self):
        ring = PolynomialRing('Q', ('t', 'x', 'y'))
        curve = Ideal.parse(ring, ['x - t^2', 'y - t^3'])
        plane = eliminate(curve, ('x', 'y'))
        self.assertEqual(plane.ring.variables, ('x', 'y'))
        self.assertTrue(plane.equals(Ideal.parse(plane.ring, ['y^2 - x^3'])))
        self.assertTrue(curve.eliminate(('x', 'y', 't')).equals(
            curve.to_ring(ring)))
        with self.assertRaises(ValueError):
            eliminate(curve, ('w',))

    def test_exact_quotient(self):
        parse = self.ring.parse
        self.assertEqual(exact_quotient(parse('x^2 - y^2'), parse('x - y')),
                         parse('x + y'))
        with self.assertRaises(NotDivisibleError):
            exact_quotient(parse('x^2 + 1'), parse('y'))


class IdealDimensionTests(TestCase):
    """
    Tests Krull and vector space dimensions from the lead ideal
    """

    def setUp(self):
        self.ring = PolynomialRing('Q', ('x', 'y'))

    def test_krull_dim(self):
        self.assertEqual(Ideal.parse(self.ring, ['x^2', 'x*y']).krull_dim(), 1)
        self.assertEqual(power(maximal_ideal(self.ring), 2).krull_dim(), 0)
        self.assertEqual(Ideal(self.ring).krull_dim(), 2)
        self.assertEqual(Ideal(self.ring, [self.ring.one]).krull_dim(), -1)

    def test_vector_space_dim(self):
        self.assertEqual(power(maximal_ideal(self.ring), 2)
                         .vector_space_dim(), 3)
        self.assertEqual(Ideal.parse(self.ring, ['x^2', 'y^3'])
                         .vector_space_dim(), 6)
        self.assertIsNone(Ideal.parse(self.ring, ['x*y']).vector_space_dim())
        self.assertEqual(Ideal(self.ring, [self.ring.one])
                         .vector_space_dim(), 0)

    def test_non_monomial_lead(self):
        ideal = Ideal.parse(self.ring, ['x^2 - y^3', 'x*y'])
        self.assertEqual(ideal.krull_dim(), 0)
        self.assertEqual(ideal.vector_space_dim(), 5)


def random_polynomial(ring, rng):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exponents = tuple(rng.randint(0, 1) for _ in ring.variables)
        terms[exponents] = rng.choice([1, -1, 2, 3])
    return ring.from_dict(terms)


class RandomEliminationTests(TestCase):
    """
    Tests elimination with a block order against a lex basis on random ideals
    """

    def test_random_ideals(self):
        rng = random.Random(2718)
        ring = PolynomialRing('Q', ('t', 'x', 'y'))
        for _ in range(20):
            generators = [random_polynomial(ring, rng) for _ in range(2)]
            ideal = Ideal(ring, generators)
            eliminated = eliminate(ideal, ('x', 'y'))
            for g in eliminated.generators:
                self.assertTrue(ideal.contains(g.to_ring(ring)), generators)
            lex = buchberger(ideal, MonomialOrder.lex())
            free = [g.to_ring(eliminated.ring) for g in lex.elements
                    if not any(e[0] for e, _ in g.terms)]
            self.assertTrue(eliminated.equals(Ideal(eliminated.ring, free)),
                            generators)


if __name__ == '__main__':
    main()
