"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FastHamiltonError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(FastHamiltonError, ValueError):
    """A caller-supplied argument violates a documented precondition."""


class BudgetExceededError(FastHamiltonError):
    """A query budget (per-vertex or total) would be exceeded."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class OracleExhaustedError(FastHamiltonError):
    """A vertex's adjacency list ran out while a fresh neighbor was required.

    The whole algorithm must abort when this happens; callers translate it
    into a phase failure.
    """

    def __init__(self, vertex: int):
        super().__init__(f"adjacency list of vertex {vertex} exhausted")
        self.vertex = vertex


class PhaseFailureError(FastHamiltonError):
    """Structured failure of one phase of the cycle-finding pipeline.

    Attributes:
        phase: which phase gave up ("phase1-matching", "phase2-greedy-absorb",
            "phase2-add-cycle" or "phase2-close-cycle").
        stats: the RunStats snapshot at the moment of failure.
    """

    def __init__(self, phase: str, message: str, stats=None):
        super().__init__(f"{phase}: {message}")
        self.phase = phase
        self.stats = stats
