__author__ = "Mason Logan"
__credits__ = ['Mason Logan']
__license__ = "MIT"
__version__ = "0.0.1dev"
__maintainer__ = "Mason Logan"
__status__ = "Development"

from groebner.scalars import QQ_FIELD, ModularField, RationalField, \
    prime_field
from groebner.orders import MonomialOrder
from groebner.polynomial import Polynomial, PolynomialRing
from groebner.buchberger import GroebnerBasis, buchberger, groebner_basis
from groebner.hilbert import HilbertSeries, hilbert_series, \
    krull_dim_monomial
from groebner.ideal import Ideal, colon, eliminate, ideal_product, \
    ideal_sum, intersection
from groebner.modules import FreeSubmodule, ModuleOrder, syzygies, trim
