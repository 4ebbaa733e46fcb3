#!/usr/bin/env python3
"""Solve two small showcase instances with both backtracking algorithms.

The undirected instance admits a second decomposition; the directed one is
rigid: fixing any single arc forces the entire assignment, so its only
decomposition is the input pair and the verdict is an exact NONE.
"""

from hamdecomp import HamCycle, Mode, build_union, solve_bcef, solve_bsp, write_certificate

CASES = [
    ("feasible undirected", Mode.UNDIRECTED),
    ("rigid directed", Mode.DIRECTED),
]

for label, mode in CASES:
    x = HamCycle((1, 2, 3, 4, 5, 6), mode)
    y = HamCycle((1, 4, 6, 2, 3, 5), mode)
    g = build_union(x, y)
    print(f"=== {label}: x={x.vertices}, y={y.vertices}")
    for name, solver in (("path extension", solve_bsp), ("chain fixing", solve_bcef)):
        result = solver(g, x, y)
        print(f"--- {name}: {result.status.value} "
              f"(nodes={result.stats.nodes}, edges fixed={result.stats.edges_fixed})")
        print(write_certificate(result), end="")
    print()
