"""
The variant ladder
==================

Summarise the four-variant ablation and the sparse-activation sweep from
trained runs (``mmoe-mtl ablation --sparse --single-task --out runs/acceptance``
produces them; cached runs are reused).
"""

import os
import sys

import numpy as np

from mmoe_mtl.harness.ablation import format_summary, ladder_summary, run_ladder, run_sparse, single_task_table
from mmoe_mtl.harness.config import from_flat

root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "runs", "acceptance")
base = from_flat({"train.ckpt_every": 0})
if not os.path.isdir(root):
    sys.exit(f"no runs under {root}; train them first (several CPU hours)")

single = single_task_table(base, root)
ladder = run_ladder(base, root, baseline_table=single)
print(format_summary(ladder_summary(ladder)))

###############################################################################
# Multi-task delta against the single-task baselines (seed 0 baselines).

for v in ("baseline", "moe", "moe_cg", "moe_cg_mem"):
    d = [ladder[(v, s)].delta_m for s in (0, 1, 2)]
    print(f"{v:<12} delta_m per seed {np.round(d, 2)}  median {np.median(d):+.2f}")

###############################################################################
# Sparse activation: top-1 and top-2 against dense.

sparse = run_sparse(base, root)
sparse.update({("moe_cg_mem", s): ladder[("moe_cg_mem", s)] for s in (0, 1, 2)})
print(format_summary(ladder_summary(sparse, ("moe_cg_mem_top1", "moe_cg_mem_top2", "moe_cg_mem"))))
