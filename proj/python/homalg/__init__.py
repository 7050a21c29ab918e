from homalg._core import *  # noqa: F401,F403
from homalg._core import Error, InputError, MathError, __version__  # noqa: F401
