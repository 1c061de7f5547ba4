"""Frieze patterns, Farey polygons and antiperiodic SL2-tilings over exact integers."""

from .embedding import *  # noqa: F401,F403
from .enumeration import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .farey import *  # noqa: F401,F403
from .frieze import *  # noqa: F401,F403
from .hill import *  # noqa: F401,F403
from .tiling import *  # noqa: F401,F403

__version__ = "0.1.0"
