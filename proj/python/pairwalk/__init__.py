"""Continuous-time quantum walks on graph Laplacians: pair state transfer
checks, searches and twin-vertex perturbation constructions."""

from ._pairwalk import *  # noqa: F401,F403
from ._pairwalk import __doc__  # noqa: F401

__version__ = "0.1.0"
