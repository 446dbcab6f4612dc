"""Random PATRICIA tries and the asymmetric Renyi search problem.

Simulation, exact profile moments, transform representations and the
height lower-bound constant, cross-checked against each other.
"""

from .numerics import Bias, binomial, hp, hp_pow, working_precision

__version__ = "0.1.0"

__all__ = ["Bias", "binomial", "hp", "hp_pow", "working_precision", "__version__"]
