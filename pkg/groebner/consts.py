# default prime for F_p runs; large enough that random linear forms are
# generic with overwhelming probability
DEFAULT_PRIME = 32003

# monomial orders understood by ``groebner.orders.MonomialOrder``
GREVLEX = 'grevlex'
LEX = 'lex'
ELIMINATION = 'elimination'
ORDER_KINDS = (GREVLEX, LEX, ELIMINATION)
DEFAULT_ORDER = GREVLEX

# module orders understood by ``groebner.modules.ModuleOrder``
POSITION_OVER_TERM = 'pot'
TERM_OVER_POSITION = 'top'
SCHREYER = 'schreyer'
MODULE_ORDER_KINDS = (POSITION_OVER_TERM, TERM_OVER_POSITION, SCHREYER)

# number of reduced Groebner bases kept by the LRU memo
GROEBNER_CACHE_SIZE = 512

# characters accepted by the polynomial text grammar
POLYNOMIAL_ALPHABET = frozenset(
    'abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_+-*/^() \t\n'
)

# sort keys of monomials kept per monomial order
ORDER_KEY_CACHE_SIZE = 65536
