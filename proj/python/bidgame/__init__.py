from ._bidgame import *  # noqa: F401,F403
