"""Exception hierarchy shared by all ncgame modules."""


class NcgameError(Exception):
    """Base class for all errors raised by this package."""


class GraphConstructionError(NcgameError):
    pass


class SelfLoopError(GraphConstructionError):
    pass


class DuplicatePairError(GraphConstructionError):
    pass


class OwnerNotEndpointError(GraphConstructionError):
    pass


class IndexOutOfRangeError(NcgameError):
    pass


class NoSuchEdgeError(NcgameError):
    pass


class UnreachableError(NcgameError):
    pass


class DegenerateQueryError(NcgameError):
    pass


class NotTreeLikeOrientationError(NcgameError):
    """Edge query where neither endpoint is one BFS level below the other."""


class NotACycleError(NcgameError):
    pass


class NotMinCycleError(NcgameError):
    pass


class ComponentNotCyclicError(NcgameError):
    pass


class DisconnectedError(NcgameError):
    pass


class SelfTargetError(NcgameError):
    pass


class BuysExistingEdgeError(NcgameError):
    """Deviation tries to buy an edge the counterpart already owns."""


class BudgetExceededError(NcgameError):
    pass


class CandidateBudgetExceededError(BudgetExceededError):
    pass


class PreconditionFailedError(NcgameError):
    """A strategy-change bound was queried on a configuration that does not
    meet its structural preconditions.  The reason string says which one."""


class PremiseFailureError(NcgameError):
    """The case audit could not even identify its anchor vertices."""


class ParseError(NcgameError):
    pass
