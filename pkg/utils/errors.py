"""
Module defines the exception hierarchy shared by every package of the
toolkit. All errors raised on purpose derive from IbeToolkitError so the
command line front end can report them uniformly.
"""


class IbeToolkitError(Exception):
    """Base class for all toolkit errors."""


# == arithmetic ==
class FieldMismatchError(IbeToolkitError, ValueError):
    """Operands belong to different field or extension contexts."""


class ZeroInversionError(IbeToolkitError, ZeroDivisionError):
    """Inversion of the zero element was requested."""


class CurveMismatchError(IbeToolkitError, ValueError):
    """Points belong to different curves."""


class NotOnCurveError(IbeToolkitError, ValueError):
    """Coordinates do not satisfy the curve equation."""


class MapToPointError(IbeToolkitError, ValueError):
    """Identity hashing to the curve failed or the curve is unsuitable."""


class PairingError(IbeToolkitError, ValueError):
    """Degenerate pairing input or exhausted auxiliary point retries."""


class ProfileError(IbeToolkitError, ValueError):
    """Curve profile missing, malformed, or inconsistent."""


class UnsupportedKindError(IbeToolkitError, ValueError):
    """Unknown assumption kind or scheme identifier."""


# == schemes ==
class ParameterError(IbeToolkitError, ValueError):
    """Scheme parameters are unusable (e.g. group order too small)."""


class PkgAbort(IbeToolkitError):
    """The key generator hit a degenerate secret and must restart Setup."""


class MessageDomainError(IbeToolkitError, TypeError):
    """Message is not in the domain the scheme accepts."""


class MalformedCiphertextError(IbeToolkitError, ValueError):
    """Ciphertext has the wrong arity, tags or element types."""


class CiphertextRejected(IbeToolkitError):
    """A validity check of the decryption algorithm failed."""

    def __init__(self, scheme: str):
        super().__init__(f"{scheme}: ciphertext rejected")
        self.scheme = scheme


class DepthError(IbeToolkitError, ValueError):
    """Identity tuple depth outside the hierarchy bounds."""


class DelegationError(IbeToolkitError, ValueError):
    """Parent key lacks the material needed for delegation."""


class PeriodError(IbeToolkitError, ValueError):
    """Time period outside [0, N - 1] or no successor period exists."""


# == files ==
class FormatError(IbeToolkitError, ValueError):
    """Serialized data is malformed or of an unexpected kind."""


class ChecksumError(FormatError):
    """CRC trailer does not match the payload."""


# == scorecard ==
class UnpricedTermError(IbeToolkitError, KeyError):
    """A cost expression references an operation with no unit price."""


class MissingCellError(IbeToolkitError, ValueError):
    """A rank matrix has an empty cell."""


class UnknownFamilyError(IbeToolkitError, KeyError):
    """Boyen calibration requested for an unknown curve family."""
