"""Quadratic residues, two-square decompositions, Gaussian-prime and lattice-point censuses."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError

__all__ = [name for name in dir() if not name.startswith("_")]
