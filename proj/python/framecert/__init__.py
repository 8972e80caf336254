"""Exact phase-retrieval certification for finite frames.

All functions exchange JSON text; see the package README for the frame,
magnitude, and verdict schemas.
"""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # running against an in-tree build of the module
    from _core import *  # noqa: F401,F403

__version__ = "0.1.0"
