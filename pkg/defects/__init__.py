__author__ = "Mason Logan"
__credits__ = ['Mason Logan']
__license__ = "MIT"
__version__ = "0.0.1dev"
__maintainer__ = "Mason Logan"
__status__ = "Development"

from defects.setup import TensorSetup
from defects.theorems import TheoremCheckResult, check_cid, check_codepth, \
    check_codim, check_depth, check_dim, check_embdim, check_epsilon2, \
    check_equivalences, check_flat_lambda, check_flat_type, check_idd, \
    check_nontrivial, check_type
from defects.suite import SuiteResult, run_suite
from defects.corpus import battery, load_corpus
