"""Exact computations in Temperley-Lieb diagram algebras."""

from ._core import *  # noqa: F401,F403
from ._core import Element, Scalar, run_command

__all__ = [name for name in dir() if not name.startswith("_")]
