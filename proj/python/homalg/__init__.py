"""Exact verification of Hom-bialgebra structures over the rationals."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ParseError, PreconditionError, examples

__version__ = "0.1.0"
