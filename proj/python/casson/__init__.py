"""Exact-integer growth of the normalized Casson invariant over Torelli words."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
