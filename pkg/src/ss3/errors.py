"""Exception types shared across the package."""


class SS3Error(Exception):
    """Base class for every error raised by this library."""


class DegreeOutOfRange(SS3Error):
    """Requested extension degree is outside the supported range."""


class ModulusReducible(SS3Error):
    """A supplied modulus polynomial is not irreducible over F3."""


class FactorizationFailure(SS3Error):
    """q - 1 could not be factored within the configured effort."""


class ContextMismatch(SS3Error):
    """Operands belong to different field contexts."""


class DivisionByZero(SS3Error, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ZeroArgument(SS3Error):
    """Operation requires a nonzero argument."""


class ParseError(SS3Error, ValueError):
    """Text does not decode to a field element, curve, or modulus."""


class SingularCurve(SS3Error):
    """Weierstrass coefficients define a curve with zero discriminant."""


class InvalidCurve(SS3Error):
    """Canonical-form curve violates the a4 != 0 requirement."""


class PointNotOnCurve(SS3Error):
    """Coordinates do not satisfy the curve equation."""


class OracleTooLarge(SS3Error):
    """Field is too large for brute-force enumeration."""


class NotANonSquare(SS3Error):
    """Twisting element must be a non-square."""


class DParityError(SS3Error):
    """Formula only applies for the other parity of the extension degree."""


class NotSupersingularError(SS3Error):
    """Input curve is ordinary; carries its j-invariant."""

    def __init__(self, j, message: str = "curve is not supersingular"):
        super().__init__(f"{message} (j = {j})")
        self.j = j
