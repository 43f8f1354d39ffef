import math

# presentation modes
GRADED = 'graded'
LOCAL = 'local'
AFFINE = 'affine'
MODES = (GRADED, LOCAL, AFFINE)

# flatness / smoothness certificate kinds
FIELD_BASE = 'FieldBase'
POLYNOMIAL_EXTENSION = 'PolynomialExtension'
TOR1_VANISHES = 'Tor1Vanishes'
USER_ASSERTED = 'UserAsserted'
PERFECT_FIELD_BASE = 'PerfectFieldBase'

# seed used when a caller does not provide one; reports are reproducible
DEFAULT_SEED = 1729

# random linear forms tried per element of a regular sequence
REGULAR_SEQUENCE_RETRIES = 64

# rational coefficients of random linear forms are drawn from [-5, 5]
RATIONAL_COEFFICIENT_BOUND = 5

# self-injective dimension of a non-Gorenstein ring
INFINITY = math.inf

# stable field names of an InvariantReport, in rendering order
REPORT_FIELDS = ('dim', 'depth', 'codepth', 'embdim', 'codim', 'mu',
                 'epsilon2', 'cid', 'type', 'idd', 'cm', 'gorenstein', 'ci',
                 'regular', 'aci')

# number of invariant reports memoized per process
REPORT_CACHE_SIZE = 256

# name given to tensor products: "<A>_tensor_<B>"
TENSOR_JOIN = '_tensor_'
