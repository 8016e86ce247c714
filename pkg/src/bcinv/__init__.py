"""bcinv: prime splitting, ray-class index chains and zeta comparison for
number fields presented by monic irreducible integer polynomials."""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
