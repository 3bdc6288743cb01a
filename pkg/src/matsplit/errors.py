"""Exception types shared across the toolkit.

Everything raised on purpose derives from MatsplitError so callers can
catch one base class; the subclasses are named after the condition they
report, not where they are raised.
"""


class MatsplitError(Exception):
    """Base class for all errors raised by this package."""


class WidthTooLarge(MatsplitError):
    """Matrix has more columns than a 64-bit row mask can hold."""


class DuplicateLabel(MatsplitError):
    """Column / edge / vertex labels must be pairwise distinct."""


class UnknownLabel(MatsplitError):
    """A referenced label is not part of the object."""


class CorankTooLarge(MatsplitError):
    """Null-space enumeration would exceed the corank cap."""


class GroundSetTooLarge(MatsplitError):
    """Exhaustive subset search beyond the supported size cap."""


class EmptyT(MatsplitError):
    """The splitting set T must be nonempty."""


class LabelCollision(MatsplitError):
    """The label chosen for a new element already exists."""


class LoopOrColoop(MatsplitError):
    """Operation requires an element that is neither loop nor coloop."""


class TContainsCocircuit(MatsplitError):
    """Cocircuit classification requires that T contain no cocircuit."""


class InvalidArguments(MatsplitError):
    """Arguments violate a documented precondition."""


class NotNConnected(MatsplitError):
    """Input matroid fails the required connectivity precondition."""


class TheoremViolation(MatsplitError):
    """A machine-checked consequence of a proved statement failed."""


class EdgeNotAtV(MatsplitError):
    """Edge set T must consist of edges incident with the split vertex."""


class DegreeTooSmall(MatsplitError):
    """Vertex degree below what the construction requires."""


class EmptyGraph(MatsplitError):
    """Operation needs at least one edge."""


class TooFewVertices(MatsplitError):
    """Operation needs more vertices than the graph has."""


class HypothesisViolated(MatsplitError):
    """A stated hypothesis of the checked statement does not hold."""


class NotThreeConnected(MatsplitError):
    """Graph reduction requires 3-connectivity throughout."""


class FormatError(MatsplitError):
    """Malformed matroid or graph text input."""
