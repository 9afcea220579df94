"""RSK insertion as a streaming process, with exact oracles and seeded experiments."""

from .bracketing import (
    BracketAnalysis,
    bracket,
    bracket_equivalent,
    rank,
    young_tail_equivalent_binary,
)
from .decoder import CandidateLimitError, DecodeResult, decode, determination_curve
from .equivalence import (
    ClassLabel,
    TruncatedPoint,
    bernoulli_equivalent,
    coplactic_equivalent,
    count_semistandard_fillings,
    de_finetti_equivalent,
    enumerate_coplactic_class,
    enumerate_plactic_class,
    plactic_equivalent,
    semistandard_fillings,
    standard_tableaux,
    young_tail_equivalent,
)
from .stream import RskStream, ShapeEvent
from .tableau import (
    RskPair,
    SemistandardTableau,
    Shape,
    StandardTableau,
    Violation,
    Word,
    find_violation,
    row_insert,
    rsk,
    rsk_inverse,
    shape_of,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BracketAnalysis",
    "CandidateLimitError",
    "ClassLabel",
    "DecodeResult",
    "RskPair",
    "RskStream",
    "SemistandardTableau",
    "Shape",
    "ShapeEvent",
    "StandardTableau",
    "TruncatedPoint",
    "Violation",
    "Word",
    "bernoulli_equivalent",
    "bracket",
    "bracket_equivalent",
    "coplactic_equivalent",
    "count_semistandard_fillings",
    "de_finetti_equivalent",
    "decode",
    "determination_curve",
    "enumerate_coplactic_class",
    "enumerate_plactic_class",
    "find_violation",
    "plactic_equivalent",
    "rank",
    "row_insert",
    "rsk",
    "rsk_inverse",
    "semistandard_fillings",
    "shape_of",
    "standard_tableaux",
    "validate",
    "young_tail_equivalent",
    "young_tail_equivalent_binary",
    "__version__",
]
