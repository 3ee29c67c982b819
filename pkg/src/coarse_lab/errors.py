"""Exception hierarchy shared by all coarse_lab modules."""


class CoarseLabError(Exception):
    """Base class for every error raised by this package."""


# -- metric construction ----------------------------------------------------

class MetricError(CoarseLabError):
    """A candidate distance matrix violates a metric axiom."""


class AsymmetricError(MetricError):
    def __init__(self, i, j):
        super().__init__(f"matrix is asymmetric at ({i}, {j})")
        self.pair = (i, j)


class NegativeEntryError(MetricError):
    def __init__(self, i, j, value):
        super().__init__(f"negative entry {value!r} at ({i}, {j})")
        self.pair = (i, j)


class ZeroDistanceError(MetricError):
    """Zero distance between distinct points, or nonzero diagonal."""

    def __init__(self, i, j, value):
        super().__init__(f"degenerate distance {value!r} at ({i}, {j})")
        self.pair = (i, j)


class TriangleViolationError(MetricError):
    def __init__(self, i, j, k, slack):
        super().__init__(
            f"triangle inequality fails on ({i}, {j}, {k}) by {slack:.3g}"
        )
        self.triple = (i, j, k)
        self.slack = slack


class EmptyInputError(CoarseLabError):
    """A construction received an empty collection."""


# -- groups -----------------------------------------------------------------

class GroupSpecError(CoarseLabError):
    """Invalid generator data for a finite quotient group."""


class OrderExceededError(CoarseLabError):
    def __init__(self, limit):
        super().__init__(f"group enumeration passed the cap of {limit} elements")
        self.limit = limit


class DepthCapReachedError(CoarseLabError):
    """Kernel-word search hit its depth cap; carries the proven lower bound."""

    def __init__(self, lower_bound):
        super().__init__(
            f"no kernel word found up to length {lower_bound - 1}; "
            f"injectivity radius is at least {lower_bound}"
        )
        self.lower_bound = lower_bound


class SectionInvalidError(CoarseLabError):
    """A coset section fails the word-length compatibility condition."""


class NotInKernelError(CoarseLabError):
    """Internal consistency failure: a computed element left the kernel."""


# -- graphs / spectra -------------------------------------------------------

class GraphError(CoarseLabError):
    """Invalid graph data."""


class DisconnectedError(GraphError):
    """Operation requires a connected graph."""


class GapTooSmallError(CoarseLabError):
    """Spectral certificate would be vacuous at this size/degree."""


# -- solvers ----------------------------------------------------------------

class SolverError(CoarseLabError):
    """Base class for optimisation failures."""


class NoFarPairsError(SolverError):
    """No pair at or beyond the separation scale R."""


class SolverStallError(SolverError):
    """Iteration cap hit without reaching the target duality gap."""


class NotPSDError(SolverError):
    """Matrix is not positive semidefinite within tolerance."""


class UnsupportedPairError(SolverError):
    """Measure references a pair outside the window."""


class CutLimitExceededError(SolverError):
    """Cut enumeration limit (2^(n-1) - 1 cuts) exceeded."""


class SupportRadiusExceededError(SolverError):
    """Kernel family is not defined far enough out for the composition."""


# -- cones ------------------------------------------------------------------

class ZeroDiameterError(CoarseLabError):
    """Cone base must have positive diameter."""


class NonExactRotationError(CoarseLabError):
    """Rotation does not map the net to itself exactly."""

    def __init__(self, alpha, size, max_error):
        super().__init__(
            f"rotation {alpha} is not exact on a {size}-point net "
            f"(snap error {max_error:.3g})"
        )
        self.max_error = max_error


# -- CLI / IO ---------------------------------------------------------------

class InputFormatError(CoarseLabError):
    """An input file does not match its schema."""
