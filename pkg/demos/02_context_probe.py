"""
How far can a gate see?
=======================

Perturb one token and record which gate rows change. A 1x1 gating network
is blind to its neighbours; three stacked 3x3 stages see a 7x7 window and
nothing beyond it.
"""

import numpy as np

from mmoe_mtl import numerics as nx
from mmoe_mtl.backbone import TokenGrid
from mmoe_mtl.mmoe import GatingNet, gating_scores

H = W = 11
rng = np.random.default_rng(0)
x = rng.normal(size=(1, H * W, 4))
y = x.copy()
y[0, 5 * W + 5] += 3.0  # the centre token

for kernel in (1, 3, 5):
    net = GatingNet(nx.make_rng(0), 4, 16, 3, kernel, 0, 1)
    a = gating_scores(net, TokenGrid(nx.Tensor(x), H, W)).scores.data
    b = gating_scores(net, TokenGrid(nx.Tensor(y), H, W)).scores.data
    changed = (np.abs(a - b).max(-1) > 0).reshape(H, W)
    print(f"kernel {kernel}: {changed.sum()} of {H * W} token gates moved")
    for row in changed:
        print("   " + "".join("#" if c else "." for c in row))
