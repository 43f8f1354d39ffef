__author__ = "Mason Logan"
__credits__ = ['Mason Logan']
__license__ = "MIT"
__version__ = "0.0.1dev"
__maintainer__ = "Mason Logan"
__status__ = "Development"

from localalg.presentation import AlgebraPresentation, BaseAlgebra, \
    FieldBase, LocalAlgebra, fiber, minimalize, validate
from localalg.tensor import contract_to_base, fiber_dim, tensor_is_trivial, \
    tensor_product
from localalg.flatness import FlatnessCertificate, Tor1Result, \
    flatness_certificate, smoothness_certificate, tor1_over_base
from localalg.fileformat import PresentationFile, load_presentation_file, \
    parse_presentation_file, presentation_to_text
from localalg.invariants import InvariantReport, report
