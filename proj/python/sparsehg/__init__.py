from ._sparsehg import *  # noqa: F401,F403
from ._sparsehg import SparsehgError, __doc__  # noqa: F401
