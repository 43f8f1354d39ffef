"""
Monomials and monomial orders.

A monomial is an exponent tuple whose length is the variable count of its
ring; its degree is the exponent sum. Orders are represented by a sort key:
``order.key(a) > order.key(b)`` exactly when ``a > b``. Keys are kept in a
bounded LRU memo per order instance, guarded by a lock so one order can be
shared by the battery's worker threads.
"""
from operator import add, le, sub
from threading import Lock

from cachetools import LRUCache
from frozendict import frozendict

from groebner.consts import DEFAULT_ORDER, ELIMINATION, GREVLEX, LEX, \
    ORDER_KEY_CACHE_SIZE, ORDER_KINDS


def degree(exponents):
    """Total degree of an exponent tuple"""
    return sum(exponents)


def monomial_mul(a, b):
    return tuple(map(add, a, b))


def monomial_quotient(a, b):
    """``a / b`` for exponent tuples; caller guarantees ``b`` divides ``a``"""
    return tuple(map(sub, a, b))


def monomial_divides(a, b):
    """True if ``a`` divides ``b``"""
    return all(map(le, a, b))


def monomial_support(a):
    return frozenset(i for i, e in enumerate(a) if e)


def grevlex_key(exponents):
    return sum(exponents), tuple(-e for e in reversed(exponents))


class MonomialOrder:
    """
    A total, multiplicative well-order on the monomials of a ring.

    Supported kinds:
        * ``grevlex``: total degree, ties broken reverse-lexicographically
        * ``lex``: pure lexicographic with the first variable largest
        * ``elimination``: block order for the first ``block`` variables;
          compares their total degree first and breaks ties by grevlex, so
          any polynomial whose leading monomial avoids the block avoids it
          entirely
    """

    def __init__(self, kind=DEFAULT_ORDER, block=0):
        if kind not in ORDER_KINDS:
            raise ValueError(f'Unknown monomial order "{kind}"')
        if kind == ELIMINATION and block < 1:
            raise ValueError('An elimination order needs a block of at ' +
                             'least one variable')
        self.kind = kind
        self.block = block if kind == ELIMINATION else 0
        self._keys = LRUCache(maxsize=ORDER_KEY_CACHE_SIZE)
        self._lock = Lock()

    @classmethod
    def grevlex(cls):
        return cls(GREVLEX)

    @classmethod
    def lex(cls):
        return cls(LEX)

    @classmethod
    def elimination(cls, block):
        return cls(ELIMINATION, block)

    def key(self, exponents):
        with self._lock:
            cached = self._keys.get(exponents)
            if cached is None:
                cached = self._compute_key(exponents)
                self._keys[exponents] = cached
        return cached

    def _compute_key(self, exponents):
        if self.kind == GREVLEX:
            return grevlex_key(exponents)
        if self.kind == LEX:
            return exponents
        return sum(exponents[:self.block]), grevlex_key(exponents)

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def is_degree_compatible(self):
        return self.kind == GREVLEX

    def describe(self):
        return frozendict(kind=self.kind, block=self.block)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and \
            (self.kind, self.block) == (other.kind, other.block)

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == ELIMINATION:
            return f'elimination({self.block})'
        return self.kind
