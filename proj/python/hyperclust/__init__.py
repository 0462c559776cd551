"""Hypergraph similarity construction and spectral partitioning."""

try:
    from ._hyperclust import *  # noqa: F401,F403  (installed package layout)
    from ._hyperclust import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on PYTHONPATH instead
    from _hyperclust import *  # noqa: F401,F403
    from _hyperclust import __version__  # noqa: F401
