"""Exhaustive reference enumerator of Hamiltonian decompositions.

Certifies the solvers at small sizes and generates ground-truth fixtures. The
enumeration is a plain depth-first Z/W assignment over the 2n edges with only
the state engine's degree and cycle pruning: no propagation, no branching
heuristics, no difference check, and no early exit. Edge 0 is pinned to the
first component (pure naming symmetry); the residual duplicates from swapping
parallel copies collapse under canonicalization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeError
from .multigraph import HamCycle, UnionMultigraph, cycle_edge_multiset
from .state import CLOSES_NON_HAM_CYCLE, CONFLICT, W, Z, PartialState

MAX_ORACLE_N = 14


@dataclass(frozen=True)
class DecompositionSet:
    """All decompositions of a union, as canonical unordered multiset pairs."""

    decompositions: tuple[tuple[tuple, tuple], ...]
    count: int


def _canonical_pair(a_pairs, b_pairs):
    a = tuple(sorted(a_pairs))
    b = tuple(sorted(b_pairs))
    return (a, b) if a <= b else (b, a)


def canonical_input_pair(x: HamCycle, y: HamCycle):
    """The instance's own decomposition in the oracle's canonical form."""
    return _canonical_pair(
        cycle_edge_multiset(x).counts.elements(),
        cycle_edge_multiset(y).counts.elements(),
    )


def enumerate_decompositions(g: UnionMultigraph) -> DecompositionSet:
    """Every unordered pair of edge-disjoint Hamiltonian cycles covering g."""
    if g.n > MAX_ORACLE_N:
        raise TooLargeError(f"exhaustive enumeration capped at n={MAX_ORACLE_N}, got n={g.n}")
    state = PartialState(g)
    m = g.num_edges
    found = set()
    state.fix_edge(0, Z)

    def rec(e):
        if e == m:
            if state.is_complete():
                found.add(_canonical_pair(state.component_pairs(Z), state.component_pairs(W)))
            return
        mark = len(state.trail)
        for comp in (Z, W):
            r = state.fix_edge(e, comp)
            if r is not CONFLICT and r is not CLOSES_NON_HAM_CYCLE:
                rec(e + 1)
            state.undo_to(mark)

    rec(1)
    return DecompositionSet(tuple(sorted(found)), len(found))


def second_decomposition_exists(g: UnionMultigraph, x: HamCycle, y: HamCycle) -> bool:
    """True iff the union decomposes into a pair other than the inputs."""
    input_pair = canonical_input_pair(x, y)
    ds = enumerate_decompositions(g)
    return any(pair != input_pair for pair in ds.decompositions)
