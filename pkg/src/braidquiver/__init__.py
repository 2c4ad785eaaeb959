"""braidquiver: mutation-indexed presentations of ADE braid groups.

Construct the group presentation attached to any quiver in an ADE
mutation class, decide word equality via Garside normal forms, model
type A/D quivers by (tagged) triangulations, mutate quivers with
potential, and realize the generators on K0 by transvections.
"""

from .errors import (
    BraidQuiverError,
    BudgetExceededError,
    GeneratorSetMismatchError,
    InvalidQuiverError,
    NotMutationDynkinError,
    ParseError,
    ReductionError,
    UnknownGeneratorError,
    UnknownVertexError,
)
from .quivers import Quiver, chordless_cycles, dynkin_type, mutate, mutation_class
from .weyl import DynkinType

__version__ = "0.1.0"
