"""Exact toolkit for quiver mutation dynamics on Grassmannian cluster structures.

Everything is integer or rational arithmetic; no floating point is used
anywhere.  The main entry points are:

* :mod:`grassdt.quiver` -- ice quivers and the mutation rule,
* :mod:`grassdt.tracking` -- c-vectors, g-vectors and F-polynomials along
  mutation words,
* :mod:`grassdt.grassmann` -- Pluecker combinatorics, the triangular seed and
  the peaks/valleys g-vector formula,
* :mod:`grassdt.dt` -- green/reddening sequences and DT F-polynomials, both
  by mutation and by plane-partition generating functions,
* :mod:`grassdt.oracle` -- independent brute-force validation (exact minors,
  exchange-graph search, symbolic Laurent mutation),
* :mod:`grassdt.cli` / :mod:`grassdt.service` -- command line and HTTP fronts.
"""

from grassdt.quiver import IceQuiver, mutate, exchange_matrix
from grassdt.poly import Poly
from grassdt.tracking import TrackedSeed, initial_tracked, mutate_tracked

__all__ = [
    "IceQuiver",
    "mutate",
    "exchange_matrix",
    "Poly",
    "TrackedSeed",
    "initial_tracked",
    "mutate_tracked",
]

__version__ = "0.1.0"
