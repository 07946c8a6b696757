"""
Checking the generator shortcut against the whole module
========================================================

Commutativity is decided from a small generating set.  For small modules
we can also enumerate every antisymmetric element and test all pairs.
"""
import time

from antisym import classical_involution, dicyclic, dihedral, make_cyclic_ring
from antisym.group_ring import (
    antisymmetric_module_order,
    enumerate_antisymmetric_module,
    generators_commute,
    module_commutes_exhaustive,
)
from antisym.involution import enumerate_involutions

for G in (dihedral(4), dicyclic(2), dihedral(6)):
    for m in (3, 4):
        R = make_cyclic_ring(m)
        for phi in enumerate_involutions(G):
            size = antisymmetric_module_order(R, G, phi)
            if size > 4096:
                continue
            t0 = time.perf_counter()
            full = module_commutes_exhaustive(R, G, phi)
            dt = time.perf_counter() - t0
            print(f"{G.name:4s} {R.label:3s} {phi.label:6s} |M|={size:5d} "
                  f"generators={generators_commute(R, G, phi)!s:5s} all pairs={full!s:5s} ({dt * 1e3:.0f} ms)")

# the module really is what the closure says
Q8 = dicyclic(2)
M = enumerate_antisymmetric_module(make_cyclic_ring(3), Q8, classical_involution(Q8))
print(len(M), "elements, e.g.", M[5])
