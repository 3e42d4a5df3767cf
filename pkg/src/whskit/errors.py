"""Error types.

Everything the toolkit raises on bad-but-well-typed input derives from
:class:`WhskitError`, so the CLI can map the whole family to exit code 2 and
keep exit code 1 for usage errors (bad flags, malformed numbers).
"""


class WhskitError(Exception):
    """Base class for domain errors raised by whskit."""


class InvalidCartanType(WhskitError):
    """Unknown family letter or rank out of range for the family."""


class InvalidCartanMatrix(WhskitError):
    """Matrix is not a generalized Cartan matrix of the expected shape."""


class GroupTooLarge(WhskitError):
    """Weyl group order exceeds the generation cap."""


class NotMinimalRepresentative(WhskitError):
    """A coset-cell operation was handed a non-minimal Weyl element."""


class RankDeficient(WhskitError):
    """Matrix does not have full column rank where required."""


class SpanDeficient(WhskitError):
    """Vector configuration does not span the ambient space."""


class DimensionMismatch(WhskitError):
    """Operands have incompatible shapes or lengths."""


class SingularMatrix(WhskitError):
    """Exact inverse requested of a singular matrix."""


class TooManyColumns(WhskitError):
    """Configuration equivalence search refused: permutation space too large."""


class InvalidWeights(WhskitError):
    """Weight vector violates its contract (positivity, integrality, length)."""


class NonInvertibleEvenPart(WhskitError):
    """Dual-number division by an element whose even part is zero."""


class InvalidExchangeMatrix(WhskitError):
    """Matrix is not skew-symmetrizable / has the wrong shape for a seed."""


class NotBipartite(WhskitError):
    """Cartan graph has an odd cycle, so no bipartite orientation exists."""


class FrozenVertex(WhskitError):
    """Mutation requested at a frozen vertex."""


class CapExceeded(WhskitError):
    """Seed enumeration exceeded its node cap."""


class QuiverNotPeriodic(WhskitError):
    """Weight search requested for a quiver that is not mutation-periodic."""


class StepTooLarge(WhskitError):
    """Finite-difference Hessian failed its Hermitian-residual sanity check."""


class ReductionError(WhskitError):
    """Internal consistency failure during weight reduction."""
