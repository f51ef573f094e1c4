"""Public-key encryption over the Pell conic via Redei rational functions.

Thin re-export of the compiled extension. Big integers are Python ints;
the parameter-line identity (alpha) is None.
"""

try:
    from ._pellredei import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _pellredei import *  # noqa: F401,F403  (build-tree layout)

__version__ = "0.1.0"
