"""Exception hierarchy.

Two families matter to callers.  Plain input problems (bad arguments,
malformed files, truncation choices that cannot work) derive from
``ValueError``.  Anything deriving from :class:`MathViolation` means a
computed object broke a structural statement it is expected to satisfy
(integrality, sign, parity, support, an identity).  Those carry a JSON-able
``diagnostic`` so a counterexample is never reduced to a bare message.
"""


class DivisionByZero(ZeroDivisionError):
    pass


class NotLaurent(ValueError):
    """A rational function did not reduce to an integral Laurent polynomial."""

    def __init__(self, value):
        self.value = value
        super().__init__(f"not an integral Laurent polynomial: {value}")


class BadConstantTerm(ValueError):
    pass


class CapExceeded(ValueError):
    pass


class TruncationTooTight(ValueError):
    pass


class IncompleteExponents(ValueError):
    pass


class InvalidTau(ValueError):
    pass


class NotPrime(ValueError):
    pass


class QuiverFormatError(ValueError):
    pass


class IndexOutOfRange(QuiverFormatError):
    pass


class MathViolation(Exception):
    """Base for violations of an expected mathematical structure."""

    kind = "violation"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def diagnostic(self):
        out = {"error": self.kind, "message": str(self)}
        for key, value in self.details.items():
            out[key] = _jsonable(value)
        return out


class IntegralityViolation(MathViolation):
    kind = "IntegralityViolation"


class SignViolation(MathViolation):
    kind = "SignViolation"


class ParityViolation(MathViolation):
    kind = "ParityViolation"


class SupportViolation(MathViolation):
    kind = "SupportViolation"


class NonIntegerResult(MathViolation):
    kind = "NonIntegerResult"


class MismatchAt(MathViolation):
    kind = "MismatchAt"


def _jsonable(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value) if abs(value) >= 2**53 else value
    if isinstance(value, (str, float, bool)) or value is None:
        return value
    return str(value)
