"""
Sweeping the bundled universe
=============================

Classify every (ring, group, involution) triple and count how often each
condition is responsible for commutativity.
"""
import numpy as np

from antisym.theorem import verify_equivalence
from antisym.universe import GROUP_SPECS, RING_SPECS, bundled_triples

summary = verify_equivalence(bundled_triples())
print(f"{summary.total} triples, {summary.commuting} commuting, failures: {len(summary.failures)}")

# commuting fraction per (group, ring)
groups = sorted({r["group"] for r in summary.records}, key=[g.replace("Dic2", "Q8") for g in GROUP_SPECS].index)
rings = list(RING_SPECS)
frac = np.zeros((len(groups), len(rings)))
for rec in summary.records:
    i, j = groups.index(rec["group"]), rings.index(rec["ring"])
    frac[i, j] += rec["commutes"]
counts = np.array([[sum(1 for r in summary.records if r["group"] == g and r["ring"] == R) for R in rings] for g in groups])
frac /= counts

print(" " * 7 + "".join(f"{R:>8s}" for R in rings))
for g, row in zip(groups, frac):
    print(f"{g:7s}" + "".join(f"{x:8.2f}" for x in row))

# which condition fires, split by ring characteristic
for i in range(1, 5):
    hits = [r["ring"] for r in summary.records if r[f"cond{i}"]]
    print(f"cond{i}: {len(hits):4d} triples, rings {sorted(set(hits))}")
