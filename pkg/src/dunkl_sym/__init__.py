"""Exact symmetry algebra of the dihedral Dunkl-Dirac operator for Z2 x D_2m."""
from .config import ConfigError, SessionConfig

__version__ = "0.1.0"
__all__ = ["ConfigError", "SessionConfig", "__version__"]
