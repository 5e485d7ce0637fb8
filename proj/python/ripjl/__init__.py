"""Norm-preserving random embeddings from restricted isometries.

The compiled extension carries the full API; this package re-exports it.
"""

from ripjl._core import *  # noqa: F401,F403
from ripjl._core import __version__  # noqa: F401
