"""Extended multiple zeta values, complementary zeta functions, closed forms
and structural identity verification."""

try:
    from ._ezeta import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # extension built in-tree and placed on sys.path
    from _ezeta import *  # noqa: F401,F403
