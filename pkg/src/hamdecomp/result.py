"""Solver verdicts and search statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .multigraph import HamCycle


class SolveStatus(enum.Enum):
    DECOMPOSED = "DECOMPOSED"
    NONE_EXISTS = "NONE"
    TIMED_OUT = "TIMEOUT"


@dataclass
class SolveStats:
    nodes: int = 0
    edges_fixed: int = 0
    max_depth: int = 0
    elapsed_ms: int = 0

    def deterministic_fields(self) -> tuple[int, int, int]:
        """Everything except wall-clock time; equal across reruns."""
        return (self.nodes, self.edges_fixed, self.max_depth)


@dataclass
class SolveResult:
    """Outcome of one solver run.

    DECOMPOSED carries a witness pair (z, w): two edge-disjoint Hamiltonian
    cycles partitioning the union's edge multiset, with z's multiset different
    from both inputs. NONE_EXISTS is an exact negative verdict; TIMED_OUT
    means a budget expired first.
    """

    status: SolveStatus
    z: HamCycle | None = None
    w: HamCycle | None = None
    stats: SolveStats = field(default_factory=SolveStats)
