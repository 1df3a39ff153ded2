"""Exception hierarchy for graph validation, formula dispatch and solvers."""


class WeakDimError(Exception):
    """Base class for all library errors."""


class VertexOutOfRange(WeakDimError):
    pass


class SelfLoop(WeakDimError):
    pass


class DuplicateEdge(WeakDimError):
    pass


class NotConnected(WeakDimError):
    pass


class EdgeListFormatError(WeakDimError):
    """Malformed edge-list or vertex-set text input."""


class InvalidFamilyParameters(WeakDimError):
    pass


class SameVertex(WeakDimError):
    pass


class TrivialGraph(WeakDimError):
    """Operation undefined on the one-vertex graph."""


class NotATree(WeakDimError):
    pass


class WrongTreeClass(WeakDimError):
    """Tree-specific construction applied to the wrong kind of tree."""


class ParameterOutOfRange(WeakDimError):
    pass


class FormulaNotCovered(WeakDimError):
    """No closed form for these parameters; use the exact solver instead."""


class TooLarge(WeakDimError):
    """Instance exceeds the exhaustive-search size cap."""


class KaboveKappa(WeakDimError):
    """Requested threshold k exceeds kappa, so no feasible set exists.

    Carries the limiting value and, when available, a witness pair whose
    total distance difference equals it.
    """

    def __init__(self, k, kappa, witness=None):
        self.k = k
        self.kappa = kappa
        self.witness = witness
        msg = f"k={k} infeasible: kappa={kappa}"
        if witness is not None:
            msg += f" (witness pair {witness})"
        super().__init__(msg)


class KaboveKappaPrime(WeakDimError):
    """Requested k exceeds kappa', the largest k admitting a k-resolving set."""

    def __init__(self, k, kappa_prime, witness=None):
        self.k = k
        self.kappa_prime = kappa_prime
        self.witness = witness
        msg = f"k={k} infeasible: kappa'={kappa_prime}"
        if witness is not None:
            msg += f" (witness pair {witness})"
        super().__init__(msg)
