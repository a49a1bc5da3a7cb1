"""Gauss polynomials, roots of unity and the q-deformed oscillator."""

from ._qosc import *  # noqa: F401,F403
from ._qosc import __version__  # noqa: F401
