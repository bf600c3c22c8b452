"""Plug-in joint entropy and mutual information for pairs of categorical variables."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401

TABLE_EXAMPLE = [[0.2, 0.4], [0.1, 0.3]]
