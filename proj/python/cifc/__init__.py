"""Sum-capacity bounds and one-shot linear schemes for K-user cognitive interference channels."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetError, DomainError, StructuralError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
