"""Exception types shared across the package."""


class KnotslopesError(Exception):
    """Base class for all package-specific errors."""


class PDSyntaxError(KnotslopesError, ValueError):
    """A PD-code string does not conform to the grammar."""


class PDValidationError(KnotslopesError, ValueError):
    """A syntactically valid PD code does not describe an oriented knot diagram."""


class VariableMismatchError(KnotslopesError, ValueError):
    """Arithmetic attempted between Laurent polynomials in different variables."""


class ExactDivisionError(KnotslopesError, ArithmeticError):
    """Laurent polynomial division left a nonzero remainder."""


class ResourceLimitError(KnotslopesError, RuntimeError):
    """A computation would exceed the configured resource budget."""


class InsufficientDataError(KnotslopesError, ValueError):
    """Not enough sequence data to verify a quasi-polynomial fit."""


class AdequacyError(KnotslopesError, ValueError):
    """A closed-form degree model was requested on an inadequate side."""


class PretzelParameterError(KnotslopesError, ValueError):
    """Pretzel parameters violate the knot condition or the closed-form hypotheses."""


class DataIntegrityError(KnotslopesError, ValueError):
    """Computed data violates an invariant that should hold for valid inputs."""
