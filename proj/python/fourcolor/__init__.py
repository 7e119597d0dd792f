"""String-set automaton for four-coloring plane near-triangulations."""

from ._fourcolor import *  # noqa: F401,F403
from ._fourcolor import FourColorError, LSet, PlaneGraph, SearchReport  # noqa: F401

__version__ = "0.1.0"
