#!/usr/bin/env python3
"""Generate seeded random instances and look at the feasibility split.

Random undirected unions almost always admit a second decomposition; random
directed unions mostly do not, which is what makes exact negative verdicts
interesting there. Generation is bit-exact across platforms and reruns.
"""

from hamdecomp import Mode, SolveStatus, build_union, gen_instance, solve_bcef, write_instance

print("one generated instance, serialized:")
print(write_instance(gen_instance(8, Mode.DIRECTED, 2024)))

for mode in (Mode.UNDIRECTED, Mode.DIRECTED):
    feasible = 0
    runs = 60
    for seed in range(runs):
        inst = gen_instance(32, mode, seed)
        g = build_union(inst.x, inst.y)
        if solve_bcef(g, inst.x, inst.y).status is SolveStatus.DECOMPOSED:
            feasible += 1
    print(f"{mode.value:>10} n=32: {feasible}/{runs} feasible")
