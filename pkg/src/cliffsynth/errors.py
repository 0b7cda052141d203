"""Exception types raised across the package."""


class CliffSynthError(Exception):
    """Base class for all package errors."""


class SingularMatrixError(CliffSynthError):
    """Matrix is not invertible over GF(2)."""


class NotSymmetricError(CliffSynthError):
    """Matrix expected to be symmetric."""


class UnsolvableError(CliffSynthError):
    """Syndrome target is outside the row span of H."""


class BadPauliCharError(CliffSynthError):
    """Pauli word contains a character outside I/X/Y/Z."""


class LengthMismatchError(CliffSynthError):
    """Pauli word length does not match the declared qubit count."""


class SizeMismatchError(CliffSynthError):
    """Operands act on different qubit counts."""


class BadDimsError(CliffSynthError):
    """Invalid (n, k) tableau dimensions."""


class BadQubitError(CliffSynthError):
    """Gate addressed to a qubit outside its valid range."""


class BadColumnError(CliffSynthError):
    """Free column operation addressed outside the free-column block."""


class RangeViolationError(CliffSynthError):
    """Two-qubit graph operation crosses the input/output block boundary."""


class DiagonalMismatchError(CliffSynthError):
    """H/Rx graph operation applied with the wrong diagonal value."""


class BadLengthError(CliffSynthError):
    """Amplitude bitstring length does not match (n, k)."""


class NotFullOperatorError(CliffSynthError):
    """Normal form requires k = n."""


class NotReducedError(CliffSynthError):
    """Sign fixing requires a tableau already reduced to the identity."""


class BadStructureError(CliffSynthError):
    """Circuit is not a phase-polynomial sandwich."""


class NonCommutingError(CliffSynthError):
    """Pauli set is not pairwise commuting."""


class DependentColumnsError(CliffSynthError):
    """Pauli set is linearly dependent."""


class TooManyPaulisError(CliffSynthError):
    """More Paulis than qubits."""


class BadGateError(CliffSynthError):
    """Unknown gate kind or malformed gate."""


class TooLargeError(CliffSynthError):
    """Dense simulation requested beyond the size cutoff."""


class DimMismatchError(CliffSynthError):
    """Dense operators have different shapes."""


class ParseError(CliffSynthError):
    """Malformed input file."""


class VerificationFailedError(CliffSynthError):
    """Replay of a circuit did not reproduce the target tableau."""


class BadConfigError(CliffSynthError):
    """Inconsistent CLI configuration."""
