"""
Non-commuting pairs in characteristic 3
=======================================

When the antisymmetric elements commute over a ring of characteristic 3,
every non-commuting pair of moved elements satisfies one of six relation
patterns.  Here we tabulate the patterns seen in the extraspecial group
of order 27 and in D3.
"""
from collections import Counter

from antisym import dihedral, heisenberg27, make_cyclic_ring
from antisym.involution import enumerate_involutions
from antisym.lemmas import _moved_noncommuting_pairs, commutator_generation, pair_case_char3
from antisym.theorem import classify

Z3 = make_cyclic_ring(3)
for G in (dihedral(3), heisenberg27()):
    seen = Counter()
    positives = 0
    for phi in enumerate_involutions(G):
        if not classify(Z3, G, phi).commutes:
            continue
        positives += 1
        for g, h in _moved_noncommuting_pairs(G, phi):
            cases = pair_case_char3(Z3, G, phi, g, h)
            seen[tuple(sorted(cases))] += 1
            if cases & {3, 4, 5, 6}:
                assert commutator_generation(Z3, G, phi, g, h, commutes=True)
    print(f"{G.name}: {positives} commuting involutions")
    for cases, n in sorted(seen.items()):
        print(f"  cases {cases}: {n} pairs")
