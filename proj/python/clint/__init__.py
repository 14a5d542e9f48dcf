from ._clint import *  # noqa: F401,F403
