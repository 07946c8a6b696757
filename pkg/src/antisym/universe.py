"""The bundled universe of (ring, group, involution) triples."""
from __future__ import annotations

from functools import lru_cache

from .group import cyclic, dicyclic, dihedral, direct_product, heisenberg27, symmetric
from .involution import enumerate_involutions
from .ring import make_cyclic_ring, make_product_ring
from .theorem import Triple

GROUP_SPECS = (
    "D3", "D4", "D5", "D6", "D7", "D8",
    "Dic2", "Dic3", "Dic4",
    "S4", "C2xD4", "C2xDic2", "C4xS3",
    "H27",
)
RING_SPECS = ("Z3", "Z4", "Z5", "Z6", "Z9", "Z12", "Z4xZ2")


def bundled_groups():
    groups = [dihedral(n) for n in range(3, 9)]
    groups += [dicyclic(n) for n in (2, 3, 4)]
    groups += [
        symmetric(4),
        direct_product(cyclic(2), dihedral(4)),
        direct_product(cyclic(2), dicyclic(2)),
        direct_product(cyclic(4), symmetric(3)),
        heisenberg27(),
    ]
    return groups


def bundled_rings():
    rings = [make_cyclic_ring(m) for m in (3, 4, 5, 6, 9, 12)]
    rings.append(make_product_ring([make_cyclic_ring(4), make_cyclic_ring(2)]))
    return rings


@lru_cache(maxsize=None)
def _cached_universe():
    groups = bundled_groups()
    rings = bundled_rings()
    out = []
    for G in groups:
        invs = enumerate_involutions(G)
        for R in rings:
            for k, phi in enumerate(invs):
                out.append(Triple(R, G, phi, k))
    return tuple(out)


def bundled_triples() -> list[Triple]:
    """Every triple ordered by (group, ring, involution index)."""
    return list(_cached_universe())


def small_groups_of_order_at_most(n: int):
    return [G for G in bundled_groups() if G.order <= n]
