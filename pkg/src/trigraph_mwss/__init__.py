"""Exact maximum-weight stable sets in weighted {ISK4, wheel}-free trigraphs."""

from .trigraph import Trigraph
from .weighting import WeightedTrigraph, WeightFunction

__version__ = "0.1.0"

__all__ = ["Trigraph", "WeightFunction", "WeightedTrigraph", "__version__"]
