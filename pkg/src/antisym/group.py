"""Finite groups stored as Cayley tables over element indices 0..n-1.

Index 0 is always the identity.  Everything downstream (involutions,
group rings, the condition predicates) works on these integer indices.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A validated Cayley table.  Treat instances as immutable."""

    def __init__(self, table, name: str = "G", labels=None):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("Cayley table must be a non-empty square array")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise GroupError("Cayley table entries out of range")

        e = _find_identity(table)
        if e is None:
            raise GroupError("table has no identity element")
        labels = list(labels) if labels is not None else [f"e{i}" for i in range(n)]
        if len(labels) != n:
            raise GroupError("wrong number of labels")
        if e != 0:
            # swap e and 0 so the identity sits at index 0
            perm = np.arange(n)
            perm[[0, e]] = perm[[e, 0]]
            table = perm[table[np.ix_(perm, perm)]]
            labels[0], labels[e] = labels[e], labels[0]

        inv = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero(table[g] == 0)
            if len(hits) != 1 or table[hits[0], g] != 0:
                raise GroupError(f"element {g} has no two-sided inverse")
            inv[g] = hits[0]
        for g in range(n):
            if len(set(table[g].tolist())) != n:
                raise GroupError("table is not a Latin square")

        idx = np.arange(n)
        left = table[table[:, :, None], idx[None, None, :]]    # (gh)k
        right = table[idx[:, None, None], table[None, :, :]]   # g(hk)
        if not np.array_equal(left, right):
            g, h, k = (int(v[0]) for v in np.nonzero(left != right))
            raise GroupError(f"table is not associative at ({g}, {h}, {k})")

        table.flags.writeable = False
        inv.flags.writeable = False
        self.table = table
        self.inverse = inv
        self.name = name
        self.labels = tuple(str(x) for x in labels)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def mul(self, *elems: int) -> int:
        out = 0
        for g in elems:
            out = int(self.table[out, g])
        return out

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = 0
        for _ in range(k):
            out = int(self.table[out, g])
        return out

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def orders(self) -> np.ndarray:
        return np.array([element_order(self, g) for g in range(self.order)])

    @cached_property
    def mul_tensor(self) -> np.ndarray:
        """One-hot structure tensor P[g, h, c] = [g*h == c]."""
        n = self.order
        P = np.zeros((n, n, n), dtype=np.int64)
        g, h = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        P[g, h, self.table] = 1
        return P

    def to_json(self) -> dict:
        return {"name": self.name, "order": self.order, "table": self.table.tolist()}


def _find_identity(table: np.ndarray):
    idx = np.arange(table.shape[0])
    for e in idx:
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return int(e)
    return None


@dataclass(frozen=True)
class Subgroup:
    members: tuple[int, ...]

    def __contains__(self, g) -> bool:
        return g in self._set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.members)


@dataclass(frozen=True)
class QuotientMap:
    quotient: FiniteGroup
    projection: tuple[int, ...]
    kernel: Subgroup


# --- construction -----------------------------------------------------------

def from_cayley_table(table, name: str = "G", labels=None) -> FiniteGroup:
    return FiniteGroup(table, name, labels)


def _from_elements(elements, mul, name, labels) -> FiniteGroup:
    # elements[0] must be the identity
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, name, labels)


def _power_label(base: str, k: int) -> str:
    if k == 0:
        return ""
    return base if k == 1 else f"{base}^{k}"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    labels = ["1"] + [_power_label("a", k) for k in range(1, n)]
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, f"C{n}", labels)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n.  Elements r^k s^f."""
    if n < 1:
        raise GroupError("dihedral(n) needs n >= 1")
    elems = [(k, f) for f in (0, 1) for k in range(n)]

    def mul(a, b):
        k, f = a
        l, g = b
        return ((k + (-l if f else l)) % n, f ^ g)

    labels = [(_power_label("r", k) + ("s" if f else "")) or "1" for k, f in elems]
    return _from_elements(elems, mul, f"D{n}", labels)


def dicyclic(n: int) -> FiniteGroup:
    """Dic_n = <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>, order 4n.

    For n = 2 this is Q8 with i = a, j = x, k = ax, -1 = a^2.
    """
    if n < 2:
        raise GroupError("dicyclic(n) needs n >= 2")
    m = 2 * n
    elems = [(k, f) for f in (0, 1) for k in range(m)]

    def mul(a, b):
        k, f = a
        l, g = b
        if not f:
            return ((k + l) % m, g)
        if not g:
            return ((k - l) % m, 1)
        return ((k - l + n) % m, 0)

    labels = [(_power_label("a", k) + ("x" if f else "")) or "1" for k, f in elems]
    name = "Q8" if n == 2 else f"Dic{n}"
    return _from_elements(elems, mul, name, labels)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric(n) needs 1 <= n <= 5")
    elems = list(itertools.permutations(range(n)))

    def mul(p, q):
        # (pq)(i) = p(q(i))
        return tuple(p[q[i]] for i in range(n))

    labels = ["".join(str(i + 1) for i in p) for p in elems]
    return _from_elements(elems, mul, f"S{n}", labels)


def heisenberg27() -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over F_3, (a, b, c) <-> [[1,a,c],[0,1,b],[0,0,1]]."""
    elems = list(itertools.product(range(3), repeat=3))

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3)

    labels = ["".join(map(str, x)) for x in elems]
    return _from_elements(elems, mul, "H27", labels)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    m = H.order
    n = G.order * m
    idx = np.arange(n)
    g, h = idx // m, idx % m
    table = G.table[g[:, None], g[None, :]] * m + H.table[h[:, None], h[None, :]]
    labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in zip(g, h)]
    return FiniteGroup(table, f"{G.name}x{H.name}", labels)


def load_cayley_json(path) -> FiniteGroup:
    data = json.loads(Path(path).read_text())
    try:
        table = data["table"]
        name = data.get("name", Path(path).stem)
    except (TypeError, KeyError) as exc:
        raise GroupError(f"{path}: not a Cayley table document") from exc
    if "order" in data and data["order"] != len(table):
        raise GroupError(f"{path}: order {data['order']} does not match table size")
    return from_cayley_table(table, name, data.get("labels"))


# --- structure --------------------------------------------------------------

def element_order(G: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = int(G.table[x, g])
        k += 1
    return k


def subgroup_closure(G: FiniteGroup, seed) -> Subgroup:
    seen = {0}
    queue = deque([0])
    gens = sorted(set(int(s) for s in seed))
    for s in gens:
        if not 0 <= s < G.order:
            raise GroupError(f"invalid element index {s}")
    # finite group: closing under right multiplication by generators suffices
    while queue:
        x = queue.popleft()
        for s in gens:
            y = int(G.table[x, s])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(tuple(sorted(seen)))


def is_subgroup(G: FiniteGroup, members) -> bool:
    S = set(members)
    if 0 not in S:
        return False
    return all(int(G.table[a, b]) in S for a in S for b in S)


def is_normal(G: FiniteGroup, N) -> bool:
    S = set(N)
    return all(G.mul(g, x, G.inv(g)) in S for g in range(G.order) for x in S)


def commutator(G: FiniteGroup, g: int, h: int) -> int:
    """(g, h) = g h g^-1 h^-1."""
    return G.mul(g, h, G.inv(g), G.inv(h))


def center(G: FiniteGroup) -> Subgroup:
    T = G.table
    return Subgroup(tuple(int(g) for g in range(G.order) if np.array_equal(T[g], T[:, g])))


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.table, G.table.T))


def commutator_values(G: FiniteGroup) -> set[int]:
    return {commutator(G, g, h) for g in range(G.order) for h in range(G.order)}


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    return subgroup_closure(G, commutator_values(G))


def greedy_generators(G: FiniteGroup) -> list[int]:
    """Add the smallest element outside the current closure until it is all of G."""
    gens: list[int] = []
    current = {0}
    while len(current) < G.order:
        g = min(set(range(G.order)) - current)
        gens.append(g)
        current = set(subgroup_closure(G, gens))
    return gens


def subgroup_as_group(G: FiniteGroup, H) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Re-index a subgroup as a standalone group; also returns the embedding."""
    members = sorted(set(H))
    if not is_subgroup(G, members):
        raise GroupError("not a subgroup")
    pos = {g: i for i, g in enumerate(members)}
    table = [[pos[int(G.table[a, b])] for b in members] for a in members]
    sub = FiniteGroup(table, f"<{G.name}>", [G.labels[g] for g in members])
    return sub, tuple(members)


def quotient(G: FiniteGroup, N) -> QuotientMap:
    members = sorted(set(int(x) for x in N))
    if not is_subgroup(G, members):
        raise GroupError("N is not a subgroup")
    if not is_normal(G, members):
        raise GroupError("N is not normal")
    proj = [-1] * G.order
    reps: list[int] = []
    # ascending scan makes each coset's least member its representative
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        q = len(reps)
        reps.append(g)
        for x in members:
            proj[G.mul(g, x)] = q
    table = [[proj[G.mul(a, b)] for b in reps] for a in reps]
    labels = [f"{G.labels[r]}N" for r in reps]
    Q = FiniteGroup(table, f"{G.name}/N", labels)
    return QuotientMap(Q, tuple(proj), Subgroup(tuple(members)))


def extend_map(G: FiniteGroup, gens, images, *, anti: bool = False, target: FiniteGroup | None = None):
    """Extend generator images to a (anti-)homomorphism G -> target.

    Returns the map as a list, or None if the assignment does not extend.
    Checking f(xg) against f(x)f(g) on every edge x -> xg of the Cayley
    graph is enough for a finite group.
    """
    target = target or G
    f = {0: 0}
    queue = deque([0])
    gens = list(gens)
    while queue:
        x = queue.popleft()
        fx = f[x]
        for g, fg in zip(gens, images):
            y = int(G.table[x, g])
            fy = int(target.table[fg, fx]) if anti else int(target.table[fx, fg])
            if y in f:
                if f[y] != fy:
                    return None
            else:
                f[y] = fy
                queue.append(y)
    if len(f) != G.order:
        return None
    return [f[g] for g in range(G.order)]


def index_two_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All subgroups of index 2, as kernels of surjections G/G' -> C2."""
    if G.order % 2:
        return []
    qm = quotient(G, commutator_subgroup(G))
    Q = qm.quotient
    gens = greedy_generators(Q)
    c2 = cyclic(2)
    found = []
    for images in itertools.product((0, 1), repeat=len(gens)):
        if not any(images):
            continue
        f = extend_map(Q, gens, images, target=c2)
        if f is None:
            continue
        kernel = tuple(g for g in range(G.order) if f[qm.projection[g]] == 0)
        found.append(Subgroup(kernel))
    return sorted(set(found), key=lambda s: s.members)


def is_lc_with_unique_commutator(G: FiniteGroup) -> bool:
    """LC property plus a single non-trivial commutator.

    Computed directly and cross-checked against |G/Z(G)| = 4 with
    G/Z(G) of exponent 2; the two must agree.
    """
    direct = _lc_direct(G)
    via_center = _lc_via_center(G)
    if direct != via_center:
        raise AssertionError(f"LC characterisations disagree on {G.name}")
    return direct


def _lc_direct(G: FiniteGroup) -> bool:
    if is_abelian(G):
        return False
    if len(commutator_values(G) - {0}) != 1:
        return False
    Z = center(G)
    T = G.table
    for g in range(G.order):
        for h in range(G.order):
            commute = T[g, h] == T[h, g]
            central = g in Z or h in Z or int(T[g, h]) in Z
            if commute != central:
                return False
    return True


def _lc_via_center(G: FiniteGroup) -> bool:
    if is_abelian(G):
        return False
    Z = center(G)
    if G.order != 4 * len(Z):
        return False
    return all(G.mul(g, g) in Z for g in range(G.order))
