"""Finite-category engine: fam-, (fam,Sigma)-, dep- and (dep,Sigma)-structures."""

from .kernels import BACKEND
from .report import LawEntry, LawReport

__version__ = "0.1.0"

__all__ = ["BACKEND", "LawEntry", "LawReport", "__version__"]
