"""Exception taxonomy shared by every layer.

The CLI maps each class to its own exit code (see ``cli.EXIT_CODES``).
"""


class InvalidArgument(ValueError):
    """Malformed call: out-of-range vertex, wrong pair kind, bad partition."""


class ParseError(ValueError):
    """Instance text does not follow the trigraph/weight format."""


class InvalidInput(Exception):
    """The input is not in the promised class; detected downstream."""


class NotSeriesParallel(InvalidInput):
    """Degree-two elimination stalled, so treewidth exceeds two."""


class NotLineGraph(InvalidInput):
    """Root reconstruction failed."""


class InternalError(RuntimeError):
    """A state the algorithm proves impossible (e.g. an invalid transferred weight)."""


class SizeLimitExceeded(Exception):
    """An exponential oracle refused an instance above its size bound."""
