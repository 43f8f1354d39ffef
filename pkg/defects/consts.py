# process exit codes of the command line
EXIT_OK = 0
EXIT_FAILED_CHECKS = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_CERTIFICATE = 4
EXIT_REGIME = 5

# theorem filters accepted by ``check --theorem``, in suite order
DIM = 'dim'
DEPTH = 'depth'
CODEPTH = 'codepth'
IDD = 'idd'
TYPE = 'type'
CID = 'cid'
CODIM = 'codim'
EPSILON2 = 'epsilon2'
EMBDIM = 'embdim'
EQUIVALENCES = 'equiv'
FLAT = 'flat'
NONTRIVIAL = 'nontrivial'
ALL = 'all'
THEOREMS = (DIM, DEPTH, CODEPTH, IDD, TYPE, CID, CODIM, EPSILON2, EMBDIM,
            EQUIVALENCES, FLAT, NONTRIVIAL)

# invariants accepted by check_flat_lambda; the last two need a polynomial
# extension certificate
ADDITIVE_INVARIANTS = ('dim', 'depth', 'codepth', 'cid', 'idd')
MULTIPLICATIVE_INVARIANTS = ('type',)
SMOOTH_ADDITIVE_INVARIANTS = ('epsilon2', 'codim')

# which factor of a tensor setup carries the flatness certificate
FLAT_A = 'A'
FLAT_B = 'B'
FLAT_BOTH = 'both'

# corpus files shipped with the repository
SAMPLE_DATA = 'sample_data'
CORPUS_SUFFIX = '.alg'

# file name pattern of reproduction bundles
BUNDLE_NAME = 'bundle-{setup}-{seed}.json'

# package loggers whose level follows ``--verbose``
LOGGED_PACKAGES = ('groebner', 'localalg', 'defects')

# worker threads of the battery; setups are still reported in file order
DEFAULT_JOBS = 1
