"""Exception hierarchy shared across the package."""


class BraidQuiverError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidQuiverError(BraidQuiverError):
    """Input violates the loop-free / 2-cycle-free quiver invariants."""


class UnknownVertexError(BraidQuiverError):
    """A vertex id is not present in the quiver or diagram."""


class UnknownGeneratorError(BraidQuiverError):
    """A word uses a generator outside the declared generating set."""


class NotMutationDynkinError(BraidQuiverError):
    """The quiver is not mutation-equivalent to an ADE Dynkin quiver."""


class BudgetExceededError(BraidQuiverError):
    """An enumeration did not close within its configured budget."""


class GeneratorSetMismatchError(BraidQuiverError):
    """Composition of homomorphisms with incompatible generator sets."""


class ParseError(BraidQuiverError):
    """Malformed textual or JSON input."""


class ReductionError(BraidQuiverError):
    """Reduction of a quiver with potential failed to converge."""
