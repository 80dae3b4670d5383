"""Finite and symbolic topology engine for sg-closed set machinery."""

try:
    from ._sgtop import *  # noqa: F401,F403  (installed layout)
    from ._sgtop import __version__  # noqa: F401
except ImportError:  # in-tree test layout: extension on PYTHONPATH
    from _sgtop import *  # noqa: F401,F403
    from _sgtop import __version__  # noqa: F401
