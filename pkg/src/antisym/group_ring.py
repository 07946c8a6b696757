"""Arithmetic in the group ring RG and the antisymmetric-commutativity test.

Coefficients live in an int64 array of shape (|G|, k) where k is the
number of cyclic factors of R; column j is reduced modulo R.moduli[j].
"""
from __future__ import annotations

import numpy as np

from .group import FiniteGroup
from .involution import GroupInvolution, fixed_set
from .ring import FiniteRing, RingElem, two_torsion

DEFAULT_MODULE_CAP = 4096


class GroupRingError(ValueError):
    pass


class ModuleCapExceeded(RuntimeError):
    pass


class GroupRingElem:
    __slots__ = ("coeffs", "ring", "group")

    def __init__(self, coeffs, ring: FiniteRing, group: FiniteGroup):
        c = np.array(coeffs, dtype=np.int64).reshape(group.order, len(ring.moduli))
        c %= np.asarray(ring.moduli)
        c.flags.writeable = False
        self.coeffs = c
        self.ring = ring
        self.group = group

    def coefficient(self, g: int) -> RingElem:
        return tuple(int(x) for x in self.coeffs[g])

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def support(self) -> list[int]:
        return [int(g) for g in np.flatnonzero(self.coeffs.any(axis=1))]

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElem)
            and self.ring == other.ring
            and self.group is other.group
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.ring, id(self.group), self.coeffs.tobytes()))

    def __add__(self, other):
        return gr_add(self, other)

    def __neg__(self):
        return gr_neg(self)

    def __sub__(self, other):
        return gr_add(self, gr_neg(other))

    def __mul__(self, other):
        return gr_mul(self, other)

    def __repr__(self):
        terms = []
        for g in self.support():
            r = self.coefficient(g)
            coef = str(r[0]) if len(r) == 1 else str(r)
            terms.append(f"{coef}*{self.group.labels[g]}")
        return " + ".join(terms) or "0"

    def to_record(self) -> dict:
        return {self.group.labels[g]: list(self.coefficient(g)) for g in self.support()}


def zero(R: FiniteRing, G: FiniteGroup) -> GroupRingElem:
    return GroupRingElem(np.zeros((G.order, len(R.moduli))), R, G)


def basis(R: FiniteRing, G: FiniteGroup, g: int, r: RingElem | None = None) -> GroupRingElem:
    """r * e_g (r defaults to 1)."""
    c = np.zeros((G.order, len(R.moduli)), dtype=np.int64)
    c[g] = R.one if r is None else r
    return GroupRingElem(c, R, G)


def _same_parent(a: GroupRingElem, b: GroupRingElem) -> None:
    if a.ring != b.ring or a.group is not b.group:
        raise GroupRingError("operands belong to different group rings")


def gr_add(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    _same_parent(a, b)
    return GroupRingElem(a.coeffs + b.coeffs, a.ring, a.group)


def gr_neg(a: GroupRingElem) -> GroupRingElem:
    return GroupRingElem(-a.coeffs, a.ring, a.group)


def gr_scale(r: RingElem, a: GroupRingElem) -> GroupRingElem:
    return GroupRingElem(a.coeffs * np.asarray(r), a.ring, a.group)


def convolve(a: np.ndarray, b: np.ndarray, G: FiniteGroup, moduli) -> np.ndarray:
    """Batched convolution product on raw coefficient arrays (..., n, k).

    (ab)_c = sum_g a_g b_{g^-1 c}, one vectorized term per g.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    left = G.table[G.inverse]                                    # left[g, c] = g^-1 c
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for g in range(G.order):
        out += a[..., g:g + 1, :] * b[..., left[g], :]
    return out % np.asarray(moduli)


def gr_mul(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    _same_parent(a, b)
    # dense: gamma[g*h] += a[g] * b[h]
    G = a.group
    out = np.zeros_like(a.coeffs)
    prod = a.coeffs[:, None, :] * b.coeffs[None, :, :]
    np.add.at(out, G.table.ravel(), prod.reshape(G.order * G.order, -1))
    return GroupRingElem(out, a.ring, G)


def gr_involution(phi: GroupInvolution, a: GroupRingElem) -> GroupRingElem:
    if phi.group is not a.group:
        raise GroupRingError("involution is defined on a different group")
    # coefficient of g in phi(a) is the coefficient of phi(g) in a
    return GroupRingElem(a.coeffs[list(phi.perm)], a.ring, a.group)


def lie_bracket(a: GroupRingElem, b: GroupRingElem) -> GroupRingElem:
    return gr_add(gr_mul(a, b), gr_neg(gr_mul(b, a)))


def is_antisymmetric(phi: GroupInvolution, a: GroupRingElem) -> bool:
    return gr_involution(phi, a) == gr_neg(a)


def antisymmetric_generators(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution) -> list[GroupRingElem]:
    """Module generators of the antisymmetric elements.

    One e_g - e_phi(g) per orbit {g, phi(g)} of non-fixed elements (g the
    smaller index), then r * e_g for nonzero 2-torsion r and fixed g.
    """
    fixed = fixed_set(phi)
    gens = []
    for g in range(G.order):
        if g not in fixed and g < phi.perm[g]:
            gens.append(basis(R, G, g) - basis(R, G, phi.perm[g]))
    torsion = sorted(two_torsion(R) - {R.zero})
    for g in sorted(fixed):
        for r in torsion:
            gens.append(basis(R, G, g, r))
    return gens


def bracket_tensor(G: FiniteGroup) -> np.ndarray:
    """D[g, h, c] = [gh == c] - [hg == c]; [a, b]_c = sum a_g b_h D[g, h, c]."""
    P = G.mul_tensor
    return P - P.transpose(1, 0, 2)


def pairwise_brackets_vanish(A: np.ndarray, B: np.ndarray, G: FiniteGroup, moduli) -> bool:
    """True iff [a, b] = 0 for every row a of A and row b of B.

    A, B have shape (m, n, k).  Exact integer arithmetic in float64 BLAS:
    every partial sum is far below 2**53 for the sizes used here.
    """
    if len(A) == 0 or len(B) == 0:
        return True
    n = G.order
    D = bracket_tensor(G).astype(np.float64)
    for j, m in enumerate(moduli):
        a = A[:, :, j].astype(np.float64)
        b = B[:, :, j].astype(np.float64)
        # X[a, h, c] = sum_g a_g D[g, h, c]
        X = (a @ D.reshape(n, n * n)).reshape(len(a), n, n)
        for c in range(n):
            block = X[:, :, c] @ b.T
            if np.any(np.mod(np.rint(block).astype(np.int64), m)):
                return False
    return True


def _stack(elems, R: FiniteRing, G: FiniteGroup) -> np.ndarray:
    if not elems:
        return np.zeros((0, G.order, len(R.moduli)), dtype=np.int64)
    return np.stack([e.coeffs for e in elems])


def generators_commute(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution) -> bool:
    gens = antisymmetric_generators(R, G, phi)
    U = _stack(gens, R, G)
    return pairwise_brackets_vanish(U, U, G, R.moduli)


def generators_commute_pairwise(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution) -> bool:
    """Slow reference: lie_bracket on every unordered pair of generators."""
    gens = antisymmetric_generators(R, G, phi)
    return all(
        lie_bracket(u, v).is_zero()
        for i, u in enumerate(gens)
        for v in gens[i + 1:]
    )


def antisymmetric_module_order(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution) -> int:
    """|R|^p * |R_2|^f with p non-fixed orbits and f fixed elements.

    The generators have pairwise disjoint supports and R_2 is an ideal, so
    the span is a direct sum of one copy of R per orbit and one of R_2 per
    fixed element.
    """
    f = len(fixed_set(phi))
    p = (G.order - f) // 2
    return R.order ** p * len(two_torsion(R)) ** f


def _module_array(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, cap: int) -> np.ndarray:
    expected = antisymmetric_module_order(R, G, phi)
    if expected > cap:
        raise ModuleCapExceeded(f"antisymmetric module has {expected} > {cap} elements")
    gens = antisymmetric_generators(R, G, phi)
    k = len(R.moduli)
    row_moduli = np.tile(np.asarray(R.moduli), G.order)
    scalars = np.array(R.elements(), dtype=np.int64)             # (|R|, k)
    M = np.zeros((1, G.order * k), dtype=np.int64)
    for s in gens:
        # M <- M + R*s, deduplicated
        multiples = (scalars[:, None, :] * s.coeffs[None, :, :]).reshape(len(scalars), -1)
        sums = (M[:, None, :] + multiples[None, :, :]).reshape(-1, M.shape[1]) % row_moduli
        M = np.unique(sums, axis=0)
    assert len(M) == expected, (len(M), expected)
    return M.reshape(-1, G.order, k)


def enumerate_antisymmetric_module(
    R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, cap: int = DEFAULT_MODULE_CAP
) -> list[GroupRingElem]:
    """All R-linear combinations of the generators, as a closure under addition."""
    return [GroupRingElem(c, R, G) for c in _module_array(R, G, phi, cap)]


def module_size(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, cap: int = DEFAULT_MODULE_CAP) -> int:
    return len(_module_array(R, G, phi, cap))


def module_commutes_exhaustive(
    R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, cap: int = DEFAULT_MODULE_CAP,
    chunk: int = 128,
) -> bool:
    """Evaluate alpha*beta - beta*alpha for every pair of module elements.

    Works on the enumerated module, not on the generators, so it never leans
    on bilinearity.  float32 is exact here: |entries| < n^2 m^2 < 2**24.
    """
    M = _module_array(R, G, phi, cap)
    n = G.order
    D = bracket_tensor(G).astype(np.float32).reshape(n, n * n)
    for j, m in enumerate(R.moduli):
        assert (n * (m - 1)) ** 2 < 2 ** 24
        a = M[:, :, j].astype(np.float32)
        # X[x, c, h] = sum_g x_g D[g, h, c]
        X = (a @ D).reshape(len(a), n, n).transpose(0, 2, 1).copy()
        for s in range(0, len(a), chunk):
            block = X[s:s + chunk].reshape(-1, n) @ a.T            # rows (x, c), cols y
            if np.fmod(block, m).any():
                return False
    return True
