"""Exact Euler numbers and polynomials, alternating power sums and the Euler zeta function."""

from ._eulersum import *  # noqa: F401,F403
from ._eulersum import DomainError, ToleranceNotMet, ZeroConstantTerm  # noqa: F401

__version__ = "0.1.0"
