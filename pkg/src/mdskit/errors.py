"""Exception types shared across the package.

Everything raised on purpose derives from MdskitError so callers (and the
CLI) can distinguish domain errors from genuine bugs.  Inverting zero in a
field raises the builtin ZeroDivisionError.
"""


class MdskitError(Exception):
    """Base class for all mdskit errors."""


class UnsupportedOrder(MdskitError):
    """Requested field order is not a supported prime power."""


class InvalidCode(MdskitError):
    """Word set does not form a valid (n, k)_q code."""


class CodeFileError(MdskitError):
    """Code file is malformed or violates the format contract."""


class LengthMismatch(MdskitError):
    """Words of different lengths were compared."""


class TooFewWords(MdskitError):
    """Operation needs at least two codewords."""


class BadPositions(MdskitError):
    """Coordinate position set is not a valid selection for this code."""


class DuplicatePoints(MdskitError):
    """Evaluation points must be distinct."""


class DimensionTooLarge(MdskitError):
    """Dimension k exceeds what the construction supports."""


class OddCharacteristic(MdskitError):
    """Construction requires a field of characteristic 2."""


class NotPrime(MdskitError):
    """Argument must be a prime number."""


class NotLatinSquare(MdskitError):
    """Rows or columns of the array are not permutations of 0..q-1."""


class NotOrthogonal(MdskitError):
    """Two of the squares are not orthogonal."""


class NotMds(MdskitError):
    """Code does not meet the Singleton bound."""


class WrongDimension(MdskitError):
    """Code has the wrong dimension for this operation."""


class InvalidParameters(MdskitError):
    """(n, k, q) do not describe a valid MDS parameter set."""


class InadmissibleParameters(MdskitError):
    """(n, k, q) violate the combinatorial length bounds for MDS codes."""


class ZeroWordAbsent(MdskitError):
    """Operation requires the all-zero codeword; normalize the code first."""


class BadPartition(MdskitError):
    """Blocks do not partition the coordinate positions."""


class ProfileOutOfRange(MdskitError):
    """Weight profile entries exceed their block sizes."""


class WordNotInCode(MdskitError):
    """The given word is not a codeword."""


class BadMove(MdskitError):
    """Equivalence move is invalid for this code's parameters."""


class TooManyPositions(MdskitError):
    """Residual spec fixes more than k positions."""


class TheoremViolation(MdskitError):
    """A runtime-checked classification contract failed; this signals a
    counterexample to a proved statement and should never fire."""


class SearchSpaceTooLarge(MdskitError):
    """Search parameters exceed the configured desk-scale guards."""


class OutOfStatedRegime(UserWarning):
    """Closed-form enumerator evaluated outside its stated q >= k hypothesis.

    This is a warning, not an error: the value is still computed so callers
    can record empirically whether it agrees with a brute-force count.
    """
