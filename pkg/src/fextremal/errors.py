"""Exception hierarchy shared by all modules."""


class FExtremalError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FExtremalError, ValueError):
    """Argument outside the supported domain (e.g. ``n < 2``)."""


class InvalidTree(FExtremalError, ValueError):
    """Edge list does not describe a tree."""


class VertexOutOfRange(InvalidTree):
    pass


class SelfLoop(InvalidTree):
    pass


class DuplicateEdge(InvalidTree):
    pass


class HasCycle(InvalidTree):
    pass


class NotConnected(InvalidTree):
    pass


class WrongEdgeCount(InvalidTree):
    pass


class InconsistentTotal(FExtremalError, ValueError):
    """A degree spec expands to a different number of vertices than requested."""


class NotRealizable(FExtremalError, ValueError):
    """Degree multiset cannot be realized by a tree."""


class InvalidAlpha(FExtremalError, ValueError):
    """Exponent excluded from the general first Zagreb index (0 or 1)."""


class DegreeBoundViolated(FExtremalError, ValueError):
    pass


class EdgeMissing(FExtremalError, ValueError):
    pass


class EdgePresent(FExtremalError, ValueError):
    pass


class WouldDisconnect(FExtremalError, ValueError):
    pass


class Infeasible(FExtremalError, ValueError):
    """Integer program has no feasible point."""


class RouteDisagreement(FExtremalError, RuntimeError):
    """Closed form, ILP and enumeration disagree on an extremal result."""


class ParseError(FExtremalError, ValueError):
    """Malformed tree or degree-spec text."""
