"""Exception types shared across the library."""


class StateSynthError(Exception):
    """Base class for all statesynth errors."""


class NonFiniteError(StateSynthError, ValueError):
    """Input contains NaN or Inf entries."""


class NotUnitaryError(StateSynthError, ValueError):
    """Matrix fails the unitarity tolerance."""


class OddDimensionError(StateSynthError, ValueError):
    """Matrix dimension must be even for this factorization."""


class BadDimensionError(StateSynthError, ValueError):
    """Matrix or vector has an unsupported shape."""


class BadLengthError(StateSynthError, ValueError):
    """Sequence has the wrong length."""


class DimensionMismatchError(StateSynthError, ValueError):
    """Operands act on different numbers of qubits."""


class NotNormalizedError(StateSynthError, ValueError):
    """State vector norm deviates too far from 1."""


class TooFewQubitsError(StateSynthError, ValueError):
    """Operation requires more qubits than the input provides."""


class BadRangeError(StateSynthError, ValueError):
    """Numeric argument outside the supported range."""


class QasmParseError(StateSynthError, ValueError):
    """QASM text could not be parsed."""


class SynthesisError(StateSynthError, RuntimeError):
    """Internal self-check of a synthesized circuit failed."""
