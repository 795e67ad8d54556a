"""Exception types raised across the package.

Everything derives from HaddiagError so callers can catch broadly; the concrete
classes name the specific contract violation.
"""


class HaddiagError(Exception):
    """Base class for all package errors."""


class NonPmOne(HaddiagError):
    """A matrix entry is not +1 or -1."""


class NotOrthogonal(HaddiagError):
    """A pair of columns has a nonzero dot product."""


class BadOrder(HaddiagError):
    """Matrix order is not 1, 2, or a multiple of 4, or rows are not square."""


class TooLarge(HaddiagError):
    """Order exceeds the supported cap."""


class OrderOne(HaddiagError):
    """Operation undefined at order 1 (no core matrix)."""


class BadIndex(HaddiagError):
    """Row/column index out of range, or a sequence is not a permutation."""


class NotSymmetricSet(HaddiagError):
    """Cayley connection set is not closed under inversion."""


class ContainsIdentity(HaddiagError):
    """Cayley connection set contains the group identity."""


class OddOrder(HaddiagError):
    """Perfect-matching operation on a graph with an odd number of vertices."""


class NotDiagonal(HaddiagError):
    """Conjugated Laplacian has a nonzero off-diagonal entry."""


class NotDivisible(HaddiagError):
    """Diagonal entry of the conjugated Laplacian is not divisible by the order."""


class NotALaplacian(HaddiagError):
    """A column subset does not produce 0/-1 off-diagonal Laplacian entries."""


class Aborted(HaddiagError):
    """Search exceeded its node budget."""


class RaggedRows(HaddiagError):
    """Sign-text matrix rows have unequal lengths."""


class BadChar(HaddiagError):
    """Text contains a character invalid for the format being parsed."""


class NotHadamard(HaddiagError):
    """Parsed matrix failed the Hadamard checks."""


class MixedOrders(HaddiagError):
    """Catalog construction was given outcomes of different orders."""


class WrongResidue(HaddiagError):
    """Order does not satisfy the residue condition the check requires."""


class MissingData(HaddiagError):
    """A requested bundled data file is absent."""


class SchemaViolation(HaddiagError):
    """Result document does not match the expected schema."""
