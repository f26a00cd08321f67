"""Exception hierarchy. Every error carries a machine-readable ``kind``."""

from __future__ import annotations


class KnotError(Exception):
    """Base class for domain errors raised by the toolkit."""

    kind = "KnotError"

    def __init__(self, message: str = "", site=None):
        super().__init__(message)
        self.message = message
        self.site = site

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": self.message, "site": self.site}


def _make(name: str, *bases: type) -> type:
    return type(name, bases or (KnotError,), {"kind": name})


# diagram parsing and validation
MalformedCode = _make("MalformedCode", KnotError, ValueError)
InvalidEdgeSet = _make("InvalidEdgeSet", KnotError, ValueError)
OrientationConflict = _make("OrientationConflict", KnotError, ValueError)
IndexOutOfRange = _make("IndexOutOfRange", KnotError, IndexError)

# braid words
MalformedWord = _make("MalformedWord", KnotError, ValueError)
GeneratorOutOfRange = _make("GeneratorOutOfRange", KnotError, ValueError)
DegenerateParameters = _make("DegenerateParameters", KnotError, ValueError)

# preconditions of the invariant pipeline
DisconnectedDiagram = _make("DisconnectedDiagram", KnotError, ValueError)
DisconnectedClosure = _make("DisconnectedClosure", KnotError, ValueError)
MismatchedBraid = _make("MismatchedBraid", KnotError, ValueError)
NotPositive = _make("NotPositive", KnotError, ValueError)
InconsistentBounds = _make("InconsistentBounds", KnotError, ValueError)

# reconnection moves
NotFreeLoops = _make("NotFreeLoops", KnotError, ValueError)
SameCircle = _make("SameCircle", KnotError, ValueError)
InvalidPlan = _make("InvalidPlan", KnotError, ValueError)
BudgetExceeded = _make("BudgetExceeded", KnotError, RuntimeError)


class StepBudgetExceeded(KnotError, RuntimeError):
    """Raised by a cascade that hit ``max_steps``; the partial trace rides along."""

    kind = "StepBudgetExceeded"

    def __init__(self, message: str = "", site=None, trace=None):
        super().__init__(message, site)
        self.trace = trace
