"""Exception types shared across the package."""

__all__ = [
    "DcgroupError",
    "InvalidId",
    "DegreeMismatch",
    "UniverseOverflow",
    "NotNormal",
    "OrderCapExceeded",
    "ParentMismatch",
    "SearchBudgetExceeded",
    "CollectionLimitExceeded",
    "InconsistentPresentation",
    "BadPresentation",
    "UnknownFamily",
    "ParamOutOfRange",
    "NotPGroup",
    "NotTwoGroup",
    "NotAbelian",
    "NotCentral",
    "NotIsomorphism",
    "NotAutomorphism",
    "ActionNotHomomorphic",
    "SpecParseError",
    "SchemaViolation",
]


class DcgroupError(Exception):
    """Base class for all errors raised by this package."""


class InvalidId(DcgroupError):
    """Element id outside the dense range [0, order)."""


class DegreeMismatch(DcgroupError):
    """Permutation generators act on different point sets."""


class UniverseOverflow(DcgroupError):
    """Closure grew past the configured element cap."""


class NotNormal(DcgroupError):
    """Operation requires a normal subgroup."""


class OrderCapExceeded(DcgroupError):
    """Group order exceeds the cap for an exhaustive computation."""


class ParentMismatch(DcgroupError):
    """Subgroups belong to different parent groups."""


class SearchBudgetExceeded(DcgroupError):
    """A bounded search ran out of budget before finishing."""


class CollectionLimitExceeded(DcgroupError):
    """Collection did not reach a normal form within the step bound."""


class InconsistentPresentation(DcgroupError):
    """A power-commutator presentation failed an overlap test."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class BadPresentation(DcgroupError):
    """Structurally invalid power-commutator presentation."""


class UnknownFamily(DcgroupError):
    """Requested group family is not registered."""


class ParamOutOfRange(DcgroupError):
    """Family parameter outside its valid range."""


class NotPGroup(DcgroupError):
    """Operation requires a group of prime-power order."""


class NotTwoGroup(DcgroupError):
    """Operation requires a group of 2-power order."""


class NotAbelian(DcgroupError):
    """Operation requires an abelian group."""


class NotCentral(DcgroupError):
    """Designated subgroup is not central."""


class NotIsomorphism(DcgroupError):
    """Designated identification map is not an isomorphism."""


class NotAutomorphism(DcgroupError):
    """Semidirect action array is not an automorphism of the base group."""


class ActionNotHomomorphic(DcgroupError):
    """Semidirect action fails to be a homomorphism into Aut(N)."""


class SpecParseError(DcgroupError):
    """Group spec file is not syntactically valid."""


class SchemaViolation(DcgroupError):
    """Group spec parses but violates the schema."""
