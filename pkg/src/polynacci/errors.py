"""Exception types shared across the package."""


class UnsupportedOrderError(ValueError):
    """Raised when a sequence/matrix order is outside the supported range."""


class ExpansionError(ValueError):
    """Raised when a rational function cannot be expanded into an integer series."""


class NumericInstabilityError(ArithmeticError):
    """Raised when a numeric result cannot be certified (residue too large)."""


class ConvergenceError(ArithmeticError):
    """Raised when an iterative numeric method fails to reach its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class BFileError(ValueError):
    """Base for OEIS b-file problems."""


class BFileParseError(BFileError):
    """Malformed b-file line; carries the 1-based line number."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class BFileStructureError(BFileError):
    """Structurally invalid b-file (index gap, no data)."""


class AlignmentError(ValueError):
    """No offset aligns a sequence family with a b-file."""

    def __init__(self, message, tried_shifts):
        super().__init__(message)
        self.tried_shifts = tuple(tried_shifts)
