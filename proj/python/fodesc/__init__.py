"""Description complexity of unary structures: synthesis, exact search, games, entropy."""

from ._fodesc import *  # noqa: F401,F403
from ._fodesc import __doc__  # noqa: F401
