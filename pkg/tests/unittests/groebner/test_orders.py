from concurrent.futures import ThreadPoolExecutor
from unittest import TestCase, main
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from groebner.consts import ORDER_KEY_CACHE_SIZE
from groebner.orders import MonomialOrder, grevlex_key, monomial_divides, \
    monomial_mul, monomial_quotient

ORDERS = (MonomialOrder.grevlex(), MonomialOrder.lex(),
          MonomialOrder.elimination(1), MonomialOrder.elimination(2))

exponents = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


class MonomialOrderTests(TestCase):
    """
    Tests the sort keys of the supported orders on fixed monomials
    """

    def test_grevlex(self):
        order = MonomialOrder.grevlex()
        self.assertTrue(order.greater((1, 1, 0), (0, 0, 2)))
        # same degree: the smaller last exponent wins
        self.assertFalse(order.greater((1, 0, 1), (0, 2, 0)))
        self.assertTrue(order.greater((0, 2, 0), (1, 0, 1)))
        self.assertTrue(order.is_degree_compatible())

    def test_lex(self):
        order = MonomialOrder.lex()
        self.assertTrue(order.greater((1, 0, 0), (0, 5, 5)))
        self.assertFalse(order.is_degree_compatible())

    def test_elimination(self):
        order = MonomialOrder.elimination(1)
        self.assertTrue(order.greater((1, 0, 0), (0, 3, 3)))
        self.assertTrue(order.greater((1, 1, 0), (1, 0, 0)))
        self.assertEqual(repr(order), 'elimination(1)')
        with self.assertRaises(ValueError):
            MonomialOrder.elimination(0)
        with self.assertRaises(ValueError):
            MonomialOrder('deglex')

    def test_equality(self):
        self.assertEqual(MonomialOrder.elimination(2),
                         MonomialOrder.elimination(2))
        self.assertNotEqual(MonomialOrder.elimination(1),
                            MonomialOrder.elimination(2))
        self.assertEqual(MonomialOrder.lex().describe(),
                         {'kind': 'lex', 'block': 0})

    def test_monomial_helpers(self):
        self.assertEqual(monomial_mul((1, 0, 2), (0, 1, 1)), (1, 1, 3))
        self.assertEqual(monomial_quotient((1, 1, 3), (0, 1, 1)), (1, 0, 2))
        self.assertTrue(monomial_divides((0, 1, 1), (1, 1, 3)))
        self.assertFalse(monomial_divides((0, 2, 0), (1, 1, 3)))

    def test_key_memo_is_bounded(self):
        with patch('groebner.orders.ORDER_KEY_CACHE_SIZE', 8):
            order = MonomialOrder.grevlex()
        monomials = [(a, b, c) for a in range(4) for b in range(4)
                     for c in range(4)]
        for m in monomials:
            self.assertEqual(order.key(m), grevlex_key(m))
        self.assertEqual(len(order._keys), 8)
        self.assertEqual(MonomialOrder.lex()._keys.maxsize,
                         ORDER_KEY_CACHE_SIZE)

    def test_key_memo_is_shared_between_threads(self):
        with patch('groebner.orders.ORDER_KEY_CACHE_SIZE', 16):
            order = MonomialOrder.elimination(1)
        monomials = [(a, b, c) for a in range(4) for b in range(4)
                     for c in range(4)] * 20
        expected = [(m[0], grevlex_key(m)) for m in monomials]

        def keys(_):
            return [order.key(m) for m in monomials]

        with ThreadPoolExecutor(max_workers=4) as executor:
            for found in executor.map(keys, range(8)):
                self.assertEqual(found, expected)
        self.assertEqual(len(order._keys), 16)


class MonomialOrderPropertyTests(TestCase):
    """
    Tests that every order is total and multiplicative and that the unit
    monomial is the smallest
    """

    @settings(max_examples=1000, deadline=None)
    @given(exponents, exponents, exponents)
    def test_total_and_multiplicative(self, a, b, c):
        for order in ORDERS:
            outcomes = [order.greater(a, b), order.greater(b, a), a == b]
            self.assertEqual(outcomes.count(True), 1, (order, a, b))
            if order.greater(a, b):
                self.assertTrue(order.greater(monomial_mul(a, c),
                                              monomial_mul(b, c)),
                                (order, a, b, c))

    @settings(max_examples=200, deadline=None)
    @given(exponents)
    def test_unit_is_smallest(self, a):
        for order in ORDERS:
            self.assertFalse(order.greater((0, 0, 0), a), (order, a))


if __name__ == '__main__':
    main()
