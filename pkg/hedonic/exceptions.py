# File: exceptions.py
# Description: Error types raised by the hedonic engine. Every error derives
# from HedonicError so callers can catch the whole family at once.


class HedonicError(ValueError):
    """Base class for every engine error"""


# Graphs

class DisconnectedGraph(HedonicError):
    pass


class InvalidEdge(HedonicError):
    pass


class SelfLoop(InvalidEdge):
    pass


class EmptySet(HedonicError):
    pass


class InvalidPlayer(HedonicError):
    pass


# Preferences

class PlayerNotMember(HedonicError):
    pass


class InfeasibleCoalition(HedonicError):
    pass


class InvalidPreference(HedonicError):
    pass


class WrongKind(HedonicError):
    """Operation needs the other preference representation"""


# Dynamics

class InvalidPartition(HedonicError):
    pass


class InvalidDeviation(HedonicError):
    pass


class ScriptedDeviationInvalid(HedonicError):
    """A scripted step does not name a valid IS deviation in the current state"""

    def __init__(self, step, message):
        self.step = step
        super().__init__(f"script step {step}: {message}")


class NotATree(HedonicError):
    pass


class NotLAS(HedonicError):
    pass


class NotAStar(HedonicError):
    pass


class InvariantViolation(HedonicError):
    """A per-step invariant monitor observed a violation"""

    def __init__(self, step, message):
        self.step = step
        super().__init__(message if step is None else f"step {step}: {message}")


# Oracle and bounds

class TooLarge(HedonicError):
    """Instance exceeds an enumeration cap"""

    def __init__(self, n, cap, what='players'):
        self.n = n
        self.cap = cap
        super().__init__(f"{n} {what} exceeds the enumeration cap of {cap}")


class GraphHasCycle(HedonicError):
    pass


class NotAnAncestor(HedonicError):
    pass


# Catalog and instance files

class UnknownExample(HedonicError):
    pass


class InstanceError(HedonicError):
    """An instance file failed to load; carries field diagnostics"""

    def __init__(self, message, errors=None):
        self.errors = errors or {}
        super().__init__(message)
