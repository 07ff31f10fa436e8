"""kellerlab: exact-arithmetic workbench for Keller maps, their bifurcation
sets, and integer points on the associated affine curves."""

from .errors import KellerlabError
from .polyring import Polynomial, PolyMap

__version__ = "0.1.0"

__all__ = ["Polynomial", "PolyMap", "KellerlabError", "__version__"]
