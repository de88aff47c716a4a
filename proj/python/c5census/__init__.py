"""Census and structure experiments for induced-C5-free, perfect and
generalised split graphs at fixed edge density."""

from c5census._core import *  # noqa: F401,F403
from c5census._core import __version__  # noqa: F401
