"""Error taxonomy shared by the whole pipeline.

ValidationError means the input itself is malformed (bad bounds, ragged
rows, weights that do not sum to one).  ComputationError means the input
passed validation but makes a downstream formula degenerate (zero column
sums, all-constant columns).  The CLI maps them to exit codes 1 and 2.
"""


class GreyRankError(Exception):
    """Base class for all greyrank errors."""


class ValidationError(GreyRankError):
    """Malformed input data or parameters."""


class ComputationError(GreyRankError):
    """Structurally valid input on which a computation is undefined."""
