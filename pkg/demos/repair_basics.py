"""
Repairing a parenthesis string
==============================

Exact distance, then the three approximate repairs on the same input.
"""

from dyckrepair import parse_compact, render_compact
from dyckrepair.oracle import dyck_edit_dp, dyck_deletion_dp
from dyckrepair.preprocess import decompose
from dyckrepair.randomdel import repair_random
from dyckrepair.refined import repair_refined
from dyckrepair.phased import repair_phased

p = parse_compact("(()[{]})(<>]][(")
print("input      ", render_compact(p))

# the cubic dynamic program gives the true optimum, with and without substitutions
exact = dyck_edit_dp(p, want_script=True)
print("optimum    ", exact.cost, render_compact(exact.repaired))
print("deletions  ", dyck_deletion_dp(p))

# adjacent matches are removed first; what is left alternates open and close runs
dec = decompose(p)
print("forced     ", dec.forced_deletions)
print("blocks     ", dec.blocks)

for name, fn in [("random", repair_random), ("refined", repair_refined),
                 ("phased", repair_phased)]:
    res = fn(p, seed=1)
    print(f"{name:<11}", res.cost, render_compact(res.repaired))
