"""Exception types shared across the package."""

from __future__ import annotations


class GuardError(ValueError):
    """An enumeration or search would exceed its size guard."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"{guard}: {message}")
        self.guard = guard


class PreconditionError(ValueError):
    """Input violates a stated precondition; `clause` names which one."""

    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"{clause}: {message}" if message else clause)
        self.clause = clause


class GraphFormatError(ValueError):
    """Malformed graph6/sparse6 input, with the byte offset of the problem."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


class DecompositionError(ValueError):
    """A class complement is not a disjoint union of stars and triangles."""

    def __init__(self, component: int, message: str = ""):
        super().__init__(message or f"component {bin(component)} is not a star or triangle")
        self.component = component
