"""Finite n-free boolean algebras, anticlique algebras of hypergraphs and
their subbase spaces, computed exactly on bitmasks."""
from . import errors
from .algebra import *  # noqa: F401,F403
from .algebra import __all__ as _algebra_all
from .config import Limits, get_limits, limits
from .hypergraph import *  # noqa: F401,F403
from .hypergraph import __all__ as _hypergraph_all
from .independence import *  # noqa: F401,F403
from .independence import __all__ as _independence_all
from .space import *  # noqa: F401,F403
from .space import __all__ as _space_all

__version__ = "0.1.0"

__all__ = (
    ["errors", "Limits", "get_limits", "limits"]
    + list(_algebra_all)
    + list(_independence_all)
    + list(_hypergraph_all)
    + list(_space_all)
)
