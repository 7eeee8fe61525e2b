"""Reductions and augmentations of combinatorial (v_r, b_k)-configurations."""

from ._core import *  # noqa: F401,F403
from ._core import ConfredError, InvalidWitness, ValidationError

__all__ = [name for name in dir() if not name.startswith("_")]
