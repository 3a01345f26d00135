"""Flat weights on a Lukasiewicz category, read as partial metric balls.

Each flat weight is rebuilt as the weight generated by an eventually
periodic sequence, and compared with the original.

Run with ``python3 demos/metric_reconstruction.py``.
"""
import numpy as np

from fuzzyorder import (LUKASIEWICZ, FlatStatus, check_flat, forward_cauchy_weights, generated_weight,
                        pms_flat_conditions, reconstruct_net, to_pms, transfer_classification)
from fuzzyorder.generate import random_category, random_weight
from fuzzyorder.presheaf import cap, yoneda

rng = np.random.default_rng(5)
c = random_category(LUKASIEWICZ, 5, rng)
x = to_pms(c)
print("partial metric (1 - hom):")
print(np.round(x.p, 3))

weights = [random_weight(c, rng) for _ in range(4)]
weights += [cap(yoneda(c, k), 0.6) for k in range(c.size)]
# constant blocks always give flat weights
weights += [f.phi for f in forward_cauchy_weights(c)]

for k, phi in enumerate(weights):
    if phi.is_trivial:
        continue
    verdict = check_flat(phi, budget=200, seed=k)
    cond = pms_flat_conditions(phi)
    line = f"w{k}: type={phi.wtype:.3f} flat={verdict.status.value:<13} (a)={cond.a_holds!s:<5} (b)={cond.b_holds!s:<5}"
    if verdict.status is FlatStatus.CERTIFIED:
        s = reconstruct_net(phi)
        g = generated_weight(s)
        err = max(abs(g.wtype - phi.wtype), float(np.max(np.abs(g.values - phi.values))))
        line += f" net: prefix={len(s.prefix)} cycle={s.cycle} err={err:.1e}"
    print(line)
    rep = transfer_classification(phi, budget=200, seed=k)
    assert rep.exact_agreement and rep.flat_agreement is not False
