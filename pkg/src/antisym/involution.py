"""Involutions on finite groups: anti-automorphisms of order at most two."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .group import (
    FiniteGroup,
    Subgroup,
    extend_map,
    greedy_generators,
    is_normal,
    is_subgroup,
    quotient,
    subgroup_closure,
)


class InvolutionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupInvolution:
    perm: tuple[int, ...]
    group: FiniteGroup
    label: str = "phi"

    def __call__(self, g: int) -> int:
        return self.perm[g]

    def __eq__(self, other):
        return (
            isinstance(other, GroupInvolution)
            and self.group is other.group
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((id(self.group), self.perm))


def validate_involution(G: FiniteGroup, perm, label: str = "phi") -> GroupInvolution:
    perm = tuple(int(p) for p in perm)
    n = G.order
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise InvolutionError("not a bijection of the group elements")
    if any(perm[perm[g]] != g for g in range(n)):
        raise InvolutionError("map has order greater than 2")
    T = G.table
    for g in range(n):
        for h in range(n):
            if perm[T[g, h]] != T[perm[h], perm[g]]:
                raise InvolutionError(
                    f"not an anti-automorphism: phi({G.labels[g]}*{G.labels[h]}) "
                    f"!= phi({G.labels[h]})*phi({G.labels[g]})"
                )
    assert perm[0] == 0
    return GroupInvolution(perm, G, label)


def classical_involution(G: FiniteGroup) -> GroupInvolution:
    return GroupInvolution(tuple(int(x) for x in G.inverse), G, "classical")


def conjugate_classical_involution(G: FiniteGroup, x: int) -> GroupInvolution:
    """g -> x g^-1 x^-1, an involution whenever x^2 is central."""
    x2 = G.mul(x, x)
    if any(G.mul(x2, g) != G.mul(g, x2) for g in range(G.order)):
        raise InvolutionError(f"{G.labels[x]}^2 is not central")
    xi = G.inv(x)
    perm = tuple(G.mul(x, G.inv(g), xi) for g in range(G.order))
    return validate_involution(G, perm, f"conj:{x}")


def enumerate_involutions(G: FiniteGroup) -> list[GroupInvolution]:
    """Every involution of G, sorted by permutation.

    Backtracks over images of a greedy generating sequence.  Images must
    keep the element order and avoid the image of the subgroup generated
    so far (injectivity); each partial assignment is extended as an
    anti-homomorphism on that subgroup and pruned on the first conflict.
    """
    gens = greedy_generators(G)
    orders = G.orders
    by_order: dict[int, list[int]] = {}
    for g in range(G.order):
        by_order.setdefault(int(orders[g]), []).append(g)

    prefixes = [subgroup_closure(G, gens[:i]).members for i in range(len(gens) + 1)]
    found: set[tuple[int, ...]] = set()

    def partial_ok(level: int, images) -> set[int] | None:
        # extend on <gens[:level]> only
        f = {0: 0}
        stack = [0]
        while stack:
            x = stack.pop()
            for g, fg in zip(gens[:level], images):
                y = int(G.table[x, g])
                fy = int(G.table[fg, f[x]])
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    stack.append(y)
        image = set(f.values())
        if len(image) != len(prefixes[level]):
            return None
        return image

    def search(level: int, images: list[int], image_set: set[int]):
        if level == len(gens):
            f = extend_map(G, gens, images, anti=True)
            if f is not None and all(f[f[g]] == g for g in range(G.order)):
                found.add(tuple(f))
            return
        g = gens[level]
        for c in by_order[int(orders[g])]:
            if c in image_set:
                continue
            nxt = images + [c]
            img = partial_ok(level + 1, nxt)
            if img is not None:
                search(level + 1, nxt, img)

    search(0, [], {0})
    return [GroupInvolution(p, G, f"idx:{k}") for k, p in enumerate(sorted(found))]


def brute_force_involutions(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Filter all |G|! bijections.  Only usable for tiny groups."""
    n = G.order
    if n > 8:
        raise ValueError("brute force is limited to |G| <= 8")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    T = G.table
    ok = np.all(np.take_along_axis(perms, perms, axis=1) == np.arange(n), axis=1)
    perms = perms[ok]
    gg, hh = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    lhs = perms[:, T]                                   # phi(gh)
    rhs = T[perms[:, hh], perms[:, gg]]                 # phi(h)phi(g)
    keep = np.all((lhs == rhs).reshape(len(perms), -1), axis=1)
    return sorted(tuple(int(x) for x in p) for p in perms[keep])


def fixed_set(phi: GroupInvolution) -> set[int]:
    return {g for g, p in enumerate(phi.perm) if g == p}


def nonfixed_generated_subgroup(phi: GroupInvolution) -> Subgroup:
    fixed = fixed_set(phi)
    return subgroup_closure(phi.group, [g for g in range(phi.group.order) if g not in fixed])


def induced_on_quotient(phi: GroupInvolution, N):
    """The involution gN -> phi(g)N on G/N.  Returns (QuotientMap, GroupInvolution)."""
    G = phi.group
    members = sorted(set(int(x) for x in N))
    if not is_subgroup(G, members) or not is_normal(G, members):
        raise InvolutionError("N must be a normal subgroup")
    if sorted(phi.perm[x] for x in members) != members:
        raise InvolutionError("N is not phi-invariant")
    qm = quotient(G, members)
    proj = qm.projection
    image = [-1] * qm.quotient.order
    for g in range(G.order):
        q, fq = proj[g], proj[phi.perm[g]]
        if image[q] == -1:
            image[q] = fq
        elif image[q] != fq:
            raise InvolutionError("induced map is not well defined")
    try:
        induced = validate_involution(qm.quotient, image, f"{phi.label} mod N")
    except InvolutionError as exc:
        raise InvolutionError(f"induced map is not an involution: {exc}") from exc
    return qm, induced


def quotient_is_fully_fixed(phi: GroupInvolution, N) -> bool:
    _, induced = induced_on_quotient(phi, N)
    return all(p == q for q, p in enumerate(induced.perm))


def quotient_is_fully_fixed_elementwise(phi: GroupInvolution, N) -> bool:
    """Same predicate via g^-1 phi(g) in N for every g."""
    G = phi.group
    S = set(N)
    return all(G.mul(G.inv(g), phi.perm[g]) in S for g in range(G.order))


def is_identity(phi: GroupInvolution) -> bool:
    return all(g == p for g, p in enumerate(phi.perm))

