"""Statistical validation of fixed-length time-series scenario sets.

Thin re-export of the compiled extension; see the package README for the
CLI and file formats.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
