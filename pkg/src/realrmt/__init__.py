"""Exact Pfaffian and Monte Carlo machinery for real random matrix ensembles."""

from . import analytics, ensembles, kernels, pfaffian, sopoly, specfun

__all__ = ["analytics", "ensembles", "kernels", "pfaffian", "sopoly", "specfun"]

__version__ = "0.1.0"
