"""Polynomial approximation of functions with an algebraic singularity."""

from ._chebrate import *  # noqa: F401,F403
from ._chebrate import __doc__  # noqa: F401

__version__ = "0.1.0"
