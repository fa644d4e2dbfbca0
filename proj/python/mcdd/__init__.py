"""Queueing analysis and stochastic simulation of a molecular-communication
drug delivery receiver."""

from mcdd._core import *  # noqa: F401,F403
