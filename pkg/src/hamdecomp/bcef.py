"""Backtracking solver based on chain edge fixing.

Every decision is followed by a forced-assignment cascade: in the directed
case fixing an arc (i, j) into one component sends i's other out-arc and j's
other in-arc to the opposite component; in the undirected case a vertex that
reaches two fixed edges in one component sends its remaining free edges to the
other. Cascades run breadth-first off a work queue, touch each edge at most
once, and leave all performed fixes on the trail so the caller can undo to a
mark after a failure.
"""

from __future__ import annotations

import time
from collections import deque

from .errors import AlreadyFixedError
from .multigraph import HamCycle, Mode, UnionMultigraph, cycle_edge_multiset, parallel_edge_pairs
from .result import SolveResult, SolveStats, SolveStatus
from .state import (
    CLOSES_NON_HAM_CYCLE,
    COMPLETES_COMPONENT,
    CONFLICT,
    FAILURES,
    FREE,
    OK,
    W,
    Z,
    BudgetClock,
    BudgetExceeded,
    FixOutcome,
    PartialState,
    SolveLimits,
)
from .bsp import check_inputs


def chain_fix(state: PartialState, e: int, comp: int, g: UnionMultigraph) -> FixOutcome:
    """Fix a free edge and propagate all forced consequences.

    Returns the first failure encountered, with every fix performed so far
    left on the trail for the caller to undo. A pending forced fix that finds
    its edge already in the opposite component is a contradiction and reports
    CONFLICT. Work per cascade is linear: each edge is fixed at most once.
    """
    if state.assignment[e] != FREE:
        raise AlreadyFixedError(f"edge {e} already fixed")
    assignment = state.assignment
    queue = deque()
    queue.append((e, comp))
    completed = False
    if g.mode is Mode.DIRECTED:
        out_inc = g.out_inc
        in_inc = g.in_inc
        tails = g.tails
        heads = g.heads
        while queue:
            f, c = queue.popleft()
            a = assignment[f]
            if a == c:
                continue
            if a != FREE:
                state.invalid = True
                return CONFLICT
            r = state.fix_edge(f, c)
            if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                return r
            if r is COMPLETES_COMPONENT:
                completed = True
            u = tails[f]
            v = heads[f]
            o = 1 - c
            pair = out_inc[u]
            sib = pair[1] if pair[0] == f else pair[0]
            if assignment[sib] == FREE:
                queue.append((sib, o))
            pair = in_inc[v]
            sib = pair[1] if pair[0] == f else pair[0]
            if assignment[sib] == FREE:
                queue.append((sib, o))
    else:
        inc = g.inc
        tails = g.tails
        heads = g.heads
        deg = state.deg
        while queue:
            f, c = queue.popleft()
            a = assignment[f]
            if a == c:
                continue
            if a != FREE:
                state.invalid = True
                return CONFLICT
            r = state.fix_edge(f, c)
            if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                return r
            if r is COMPLETES_COMPONENT:
                completed = True
            degc = deg[c]
            o = 1 - c
            u = tails[f]
            if degc[u] == 2:
                for fe in inc[u]:
                    if assignment[fe] == FREE:
                        queue.append((fe, o))
            v = heads[f]
            if degc[v] == 2:
                for fe in inc[v]:
                    if assignment[fe] == FREE:
                        queue.append((fe, o))
    return COMPLETES_COMPONENT if completed else OK


def preprocess_parallel(state: PartialState, g: UnionMultigraph,
                        after_fix=None) -> FixOutcome:
    """Split every parallel pair between the components, cascading each fix.

    Parallel copies can never share a Hamiltonian cycle, and because any
    decomposition puts one copy in each component, orienting the lower id
    into Z is a pure naming convention that loses no solutions. Cascades from
    earlier pairs may already have placed a copy; the partner is then forced
    to the opposite component. ``after_fix`` runs after each successful
    cascade (debug hook).
    """
    def fix(edge, comp):
        r = chain_fix(state, edge, comp, g)
        if after_fix is not None and r is not CONFLICT and r is not CLOSES_NON_HAM_CYCLE:
            after_fix()
        return r

    for lo, hi in parallel_edge_pairs(g):
        a_lo = state.assignment[lo]
        a_hi = state.assignment[hi]
        if a_lo == FREE and a_hi == FREE:
            r = fix(lo, Z)
            if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                return r
            if state.assignment[hi] == FREE:
                r = fix(hi, W)
                if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                    return r
        elif a_lo == FREE:
            r = fix(lo, 1 - a_hi)
            if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                return r
        elif a_hi == FREE:
            r = fix(hi, 1 - a_lo)
            if r is CONFLICT or r is CLOSES_NON_HAM_CYCLE:
                return r
        elif a_lo == a_hi:
            # unreachable through the fix engine, which rejects same-component
            # copies as a two-edge cycle or a slot conflict; kept as a guard
            state.invalid = True
            return CONFLICT
    return COMPLETES_COMPONENT if state.is_complete() else OK


def select_branch_edge(state: PartialState, g: UnionMultigraph):
    """Pick the branch vertex and its ordered candidate edges, or None.

    Directed: the vertex with free out-arcs whose incident fixed-arc count is
    maximal, so a decision propagates from both endpoints at once; candidates
    ascend by head vertex. Undirected: the vertex with the minimum nonzero
    free degree; candidates ascend by the neighbor's free degree. Ties break
    toward lower vertex and edge ids.
    """
    n = g.n
    assignment = state.assignment
    if g.mode is Mode.DIRECTED:
        odegz, odegw = state.odeg[Z], state.odeg[W]
        idegz, idegw = state.ideg[Z], state.ideg[W]
        best = 0
        best_fixed = -1
        for v in range(1, n + 1):
            if odegz[v] + odegw[v] == 2:
                continue
            fixed = odegz[v] + odegw[v] + idegz[v] + idegw[v]
            if fixed > best_fixed:
                best = v
                best_fixed = fixed
        if not best:
            return None
        cands = sorted(
            (g.heads[e], e) for e in g.out_inc[best] if assignment[e] == FREE
        )
        return best, [e for _, e in cands]
    degz, degw = state.deg[Z], state.deg[W]
    best = 0
    best_free = 5
    for v in range(1, n + 1):
        free = 4 - degz[v] - degw[v]
        if 0 < free < best_free:
            best = v
            best_free = free
    if not best:
        return None
    tails = g.tails
    heads = g.heads
    cands = []
    for e in g.inc[best]:
        if assignment[e] == FREE:
            k = heads[e] if tails[e] == best else tails[e]
            cands.append((4 - degz[k] - degw[k], k, e))
    cands.sort()
    return best, [e for _, _, e in cands]


def solve_bcef(g: UnionMultigraph, x: HamCycle, y: HamCycle,
               limits: SolveLimits = SolveLimits(),
               validate: bool = False) -> SolveResult:
    """Decide whether the union admits a second decomposition, by chain fixing.

    ``validate`` runs a full-state invariant scan after every cascade; meant
    for debug runs and tests.
    """
    check_inputs(g, x, y)
    state = PartialState(g)
    x_ms = cycle_edge_multiset(x)
    y_ms = cycle_edge_multiset(y)
    clock = BudgetClock(limits)
    stats = SolveStats()
    start = time.perf_counter()
    try:
        witness = _search(g, state, x_ms, y_ms, clock, stats, validate)
        status = SolveStatus.DECOMPOSED if witness else SolveStatus.NONE_EXISTS
    except BudgetExceeded:
        witness = None
        status = SolveStatus.TIMED_OUT
    stats.nodes = clock.nodes
    stats.edges_fixed = state.edges_fixed
    stats.elapsed_ms = int((time.perf_counter() - start) * 1000)
    if witness:
        return SolveResult(status, witness[0], witness[1], stats)
    return SolveResult(status, stats=stats)


def _search(g, state, x_ms, y_ms, clock, stats, validate):
    def scan():
        state.check_invariants()
        check_propagation_closure(state, g)

    def cascade(e, comp):
        r = chain_fix(state, e, comp, g)
        if validate and r not in FAILURES:
            scan()
        return r

    # preprocessing plus the unbranched first fix count as the root node
    clock.charge_node()
    r = preprocess_parallel(state, g, after_fix=scan if validate else None)
    if r in FAILURES:
        return None
    if state.is_complete():
        return state.extract_decomposition() if state.differs_from_inputs(x_ms, y_ms) else None

    # The first free edge lands in one of the two cycles of any decomposition;
    # naming that cycle z makes the choice branch-free.
    e0 = state.assignment.index(FREE)
    r = cascade(e0, Z)
    if r in FAILURES:
        return None
    if state.is_complete():
        return state.extract_decomposition() if state.differs_from_inputs(x_ms, y_ms) else None

    # Iterative branch-and-propagate. Frame: [cands, idx, node_mark, cand_mark].
    # cand_mark >= 0 marks a candidate whose Z-subtree is being explored;
    # FORCED flags a candidate that was already in Z when its turn came, in
    # which case a failed subtree exhausts the node.
    FORCED = -2
    frames = []
    found = []

    def push_node():
        clock.charge_node()
        if state.is_complete():
            if state.differs_from_inputs(x_ms, y_ms):
                found.append(state.extract_decomposition())
            return False
        sel = select_branch_edge(state, g)
        if sel is None:
            return False
        frames.append([sel[1], 0, len(state.trail), -1])
        if len(frames) > stats.max_depth:
            stats.max_depth = len(frames)
        return True

    if not push_node():
        return found[0] if found else None

    assignment = state.assignment
    while frames:
        frame = frames[-1]
        cand_mark = frame[3]
        if cand_mark != -1:
            # a Z-subtree for cands[idx-1] just failed
            frame[3] = -1
            if cand_mark == FORCED:
                frame[1] = len(frame[0])  # the W alternative is contradictory
                continue
            state.undo_to(cand_mark)
            e = frame[0][frame[1] - 1]
            r = cascade(e, W)
            if r in FAILURES:
                frame[1] = len(frame[0])
            elif state.is_complete():
                if state.differs_from_inputs(x_ms, y_ms):
                    found.append(state.extract_decomposition())
                    break
                frame[1] = len(frame[0])  # fully pinned and rejected
            continue
        cands = frame[0]
        idx = frame[1]
        if idx >= len(cands):
            state.undo_to(frame[2])
            frames.pop()
            continue
        frame[1] = idx + 1
        e = cands[idx]
        a = assignment[e]
        if a == W:
            continue
        if a == Z:
            frame[3] = FORCED
            if push_node():
                continue
            if found:
                break
            continue
        mark = len(state.trail)
        r = cascade(e, Z)
        if r not in FAILURES:
            frame[3] = mark
            if push_node():
                continue
            if found:
                break
            continue
        # immediate failure counts as a failed subtree: rule e out of Z
        state.undo_to(mark)
        r = cascade(e, W)
        if r in FAILURES:
            frame[1] = len(cands)
        elif state.is_complete():
            if state.differs_from_inputs(x_ms, y_ms):
                found.append(state.extract_decomposition())
                break
            frame[1] = len(cands)
    return found[0] if found else None


def check_propagation_closure(state: PartialState, g: UnionMultigraph):
    """Assert no forced assignment was left behind by a cascade."""
    assignment = state.assignment
    if g.mode is Mode.DIRECTED:
        for comp in (Z, W):
            odeg = state.odeg[comp]
            ideg = state.ideg[comp]
            for v in range(1, g.n + 1):
                if odeg[v]:
                    for e in g.out_inc[v]:
                        assert assignment[e] != FREE, (
                            f"vertex {v}: fixed out-arc with free sibling"
                        )
                if ideg[v]:
                    for e in g.in_inc[v]:
                        assert assignment[e] != FREE, (
                            f"vertex {v}: fixed in-arc with free sibling"
                        )
    else:
        for comp in (Z, W):
            deg = state.deg[comp]
            for v in range(1, g.n + 1):
                if deg[v] == 2:
                    for e in g.inc[v]:
                        assert assignment[e] != FREE, (
                            f"vertex {v}: saturated in component {comp} with a free edge"
                        )
