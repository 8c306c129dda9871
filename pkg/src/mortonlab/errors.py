"""Exception types shared across the toolkit.

Index errors reuse the builtin IndexError; everything else derives from
MortonLabError so the CLI can map failures to exit codes uniformly.
"""


class MortonLabError(Exception):
    """Base class for all toolkit errors."""

    code = "ERROR"


class ParseError(MortonLabError):
    """PD text does not match the grammar."""

    code = "PARSE_ERROR"


class InvalidPDError(MortonLabError):
    """PD text parses but violates a structural invariant (label counts,
    orientation consistency, empty link)."""

    code = "INVALID_PD"


class DisconnectedError(MortonLabError):
    """Operation requires a connected diagram."""

    code = "DISCONNECTED"


class NotEligibleError(MortonLabError):
    """Band insertion at a crossing whose smoothed arcs lie on one circle."""

    code = "NOT_ELIGIBLE"


class NotAKnotError(MortonLabError):
    """Operation requires a one-component diagram."""

    code = "NOT_A_KNOT"


class TooLargeError(MortonLabError):
    """Diagram exceeds the configured limit for an exponential-cost routine."""

    code = "TOO_LARGE"


class NegativeZDegreeError(MortonLabError):
    """Alexander specialization of a polynomial with a negative z-exponent
    (signals a link, not a knot)."""

    code = "NEGATIVE_Z_DEGREE"


class TableError(MortonLabError):
    """Knot-table ingestion failure (I/O, empty table, duplicate names)."""

    code = "IO_ERROR"


class EmptyTableError(TableError):
    code = "EMPTY_TABLE"


class DuplicateNameError(TableError):
    code = "DUPLICATE_NAME"


class UnsupportedFormatError(MortonLabError):
    code = "UNSUPPORTED_FORMAT"


class UsageError(MortonLabError):
    code = "USAGE_ERROR"
