"""Curvature checks for warped complex-hyperbolic metrics."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    DegenerateError,
    DomainError,
    InputError,
    NumericsError,
    ParameterError,
)
