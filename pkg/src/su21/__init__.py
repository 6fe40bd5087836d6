"""Exact verification toolkit for the real subalgebras of su(2,1)."""

from .field import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
