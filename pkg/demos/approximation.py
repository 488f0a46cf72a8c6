"""
Approximation ratios on planted instances
=========================================

Well-formed strings with a few planted edits, repaired three ways and
compared with the exact optimum.
"""

import numpy as np

from dyckrepair.generate import gen_instance
from dyckrepair.oracle import dyck_edit_dp
from dyckrepair.randomdel import repair_random
from dyckrepair.refined import repair_refined
from dyckrepair.phased import repair_phased
from dyckrepair.rng import substream

algos = {"random": repair_random, "refined": repair_refined, "phased": repair_phased}
ratios = {a: [] for a in algos}

for i in range(40):
    p, k = gen_instance(200, 2, 6, substream(99, i))
    opt = dyck_edit_dp(p).cost
    if opt == 0:
        continue
    for a, fn in algos.items():
        ratios[a].append(fn(p, seed=i).cost / opt)

for a, r in ratios.items():
    r = np.array(r)
    print(f"{a:<8} median {np.median(r):.2f}  mean {r.mean():.2f}  max {r.max():.2f}")
