"""Computations for the A-infinity Ext-algebra of an elliptic curve."""
from .linalg import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
