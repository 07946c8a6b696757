"""Commutativity of antisymmetric elements in finite group rings.

For a finite commutative ring R, a finite group G and an involution phi on
G, decide whether the phi-antisymmetric elements of RG commute, and check
the result against four group/ring conditions that characterise it.
"""
from .group import (
    FiniteGroup,
    Subgroup,
    center,
    commutator,
    commutator_subgroup,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    heisenberg27,
    symmetric,
)
from .group_ring import (
    GroupRingElem,
    antisymmetric_generators,
    generators_commute,
    module_commutes_exhaustive,
)
from .involution import (
    GroupInvolution,
    classical_involution,
    conjugate_classical_involution,
    enumerate_involutions,
    fixed_set,
)
from .ring import FiniteRing, make_cyclic_ring, make_product_ring
from .theorem import Verdict, classify, verify_equivalence

__version__ = "0.1.0"
