"""
Antisymmetric elements of the dihedral group ring
=================================================

Take the dihedral group of order 8 with g -> g^-1 and look at which
coefficient rings make its antisymmetric elements commute.
"""
from antisym import classical_involution, classify, dihedral, make_cyclic_ring, make_product_ring
from antisym.group_ring import antisymmetric_generators, lie_bracket
from antisym.involution import fixed_set

G = dihedral(4)
phi = classical_involution(G)
print("fixed by phi:", sorted(G.labels[g] for g in fixed_set(phi)))

# Over Z4 the generators are r - r^3 plus 2*g for each of the six fixed g
R = make_cyclic_ring(4)
for u in antisymmetric_generators(R, G, phi):
    print("  generator", u)

# every pair of generators commutes
gens = antisymmetric_generators(R, G, phi)
print("nonzero brackets:", sum(not lie_bracket(u, v).is_zero() for u in gens for v in gens))

# Adding a Z2 factor makes (2-torsion)^2 nonzero and commutativity breaks
rings = [make_cyclic_ring(m) for m in (3, 4, 5, 6, 12)]
rings.append(make_product_ring([make_cyclic_ring(4), make_cyclic_ring(2)]))
for R in rings:
    v = classify(R, G, phi)
    print(f"{R.label:7s} commutes={v.commutes!s:5s} conditions={v.report.holding()}")
