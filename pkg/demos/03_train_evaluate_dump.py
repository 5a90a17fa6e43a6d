"""
Train, evaluate and look inside a small model
=============================================

A few hundred iterations of the full memorial variant on a reduced
synthetic set, then the validation metrics and a gate-map dump.
Takes a couple of minutes on one CPU.
"""

import os
import tempfile

from mmoe_mtl.harness.config import from_flat
from mmoe_mtl.harness.dump import dump_gates
from mmoe_mtl.harness.train import evaluate, train

out = tempfile.mkdtemp(prefix="mmoe-demo-")
cfg = from_flat({"out": os.path.join(out, "run"), "variant": "moe_cg_mem", "train.iters": 200,
                 "train.ckpt_every": 100, "data.n_train": 256, "data.n_val": 64, "backbone.layers": 3})

###############################################################################
# Training is deterministic and resumable: stop halfway, then continue.

train(cfg, stop_at=100)
res = train(cfg, verbose=True)
print("checkpoint:", res.checkpoint)

###############################################################################
# Validation metrics (eval-mode BatchNorm, whole split).

table = evaluate(res.checkpoint)
print(table.to_csv())
print("losses:", {k: round(v, 4) for k, v in table.losses.items()})

###############################################################################
# Gate maps: one PGM per (layer, task, column), a CSV of raw scores per
# (layer, task) and the channel mean of each expert.

files = dump_gates(res.checkpoint, sample_seed=3, out_dir=os.path.join(out, "gates"))
print(f"{len(files)} files in {os.path.join(out, 'gates')}")
