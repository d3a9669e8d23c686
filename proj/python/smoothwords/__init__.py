"""Smooth words over two-letter alphabets."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    DomainError,
    EmptyClassError,
    InsufficientDataError,
    InvariantError,
    ResourceLimitError,
)
