"""The four commutativity conditions, classification, and sweeps over triples.

A triple is (R, G, phi): a finite commutative ring, a non-abelian finite
group and an involution on it.  ``classify`` decides commutativity of the
antisymmetric elements from the generator set and evaluates all four
conditions independently, so the equivalence can be checked per triple.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .group import (
    FiniteGroup,
    commutator_subgroup,
    index_two_subgroups,
    is_abelian,
)
from .group_ring import generators_commute
from .involution import (
    GroupInvolution,
    fixed_set,
    nonfixed_generated_subgroup,
    quotient_is_fully_fixed,
)
from .ring import FiniteRing, two_torsion, two_torsion_square_is_zero


class OutOfScope(ValueError):
    """Triple outside the classification: char(R) = 2 or G abelian."""


@dataclass
class ConditionReport:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    structural_notes: list[str] = field(default_factory=list)

    @property
    def any(self) -> bool:
        return self.cond1 or self.cond2 or self.cond3 or self.cond4

    def holding(self) -> list[int]:
        flags = (self.cond1, self.cond2, self.cond3, self.cond4)
        return [i + 1 for i, c in enumerate(flags) if c]


@dataclass
class Verdict:
    commutes: bool
    report: ConditionReport

    @property
    def theorem_ok(self) -> bool:
        return self.commutes == self.report.any

    def to_record(self, group: str, ring: str, involution: int) -> dict:
        r = self.report
        return {
            "group": group,
            "ring": ring,
            "involution": involution,
            "commutes": self.commutes,
            "cond1": r.cond1,
            "cond2": r.cond2,
            "cond3": r.cond3,
            "cond4": r.cond4,
            "theorem_ok": self.theorem_ok,
            "notes": list(r.structural_notes),
        }


def _require_nonabelian(G: FiniteGroup) -> None:
    if is_abelian(G):
        raise OutOfScope(f"{G.name} is abelian")


def pairwise_commuting(G: FiniteGroup, elems) -> bool:
    elems = list(elems)
    T = G.table
    return all(T[a, b] == T[b, a] for a in elems for b in elems)


def k_structure(phi: GroupInvolution) -> list[str]:
    """Check G = K u Kx with x fixed and phi(k) = x k x^-1 on K.

    Only meaningful when K is abelian.  Returns notes; failures start with
    "FAILED".
    """
    G = phi.group
    K = nonfixed_generated_subgroup(phi)
    if len(K) == G.order:
        return ["FAILED: K is all of G"]
    notes = [f"K index {G.order // len(K)}"]
    x = min(g for g in range(G.order) if g not in K)
    if phi(x) != x:
        notes.append(f"FAILED: x={G.labels[x]} not fixed")
    coset = {G.mul(k, x) for k in K}
    if 2 * len(K) != G.order or coset & set(K):
        notes.append("FAILED: G != K u Kx")
    xi = G.inv(x)
    if all(phi(k) == G.mul(x, k, xi) for k in K):
        notes.append(f"phi(k)=xkx^-1 verified (x={G.labels[x]})")
    else:
        notes.append("FAILED: phi(k) != xkx^-1")
    return notes


def condition_one(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, notes: list | None = None) -> bool:
    _require_nonabelian(G)
    K = nonfixed_generated_subgroup(phi)
    if not pairwise_commuting(G, K):
        return False
    if notes is not None:
        notes.extend(k_structure(phi))
    return two_torsion_square_is_zero(R)


def condition_two(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, notes: list | None = None) -> bool:
    _require_nonabelian(G)
    if two_torsion(R) != {R.zero}:
        return False
    fixed = fixed_set(phi)
    for A in index_two_subgroups(G):
        if set(A) <= fixed and pairwise_commuting(G, A):
            if notes is not None:
                notes.append(f"abelian index-2 subgroup of order {len(A)} fixed pointwise")
            return True
    return False


def condition_three(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, notes: list | None = None) -> bool:
    _require_nonabelian(G)
    if R.characteristic != 4:
        return False
    Gd = commutator_subgroup(G)
    if len(Gd) != 2 or not quotient_is_fully_fixed(phi, Gd):
        return False
    if any(phi(G.mul(g, g)) != G.mul(g, g) for g in range(G.order)):
        return False
    if two_torsion_square_is_zero(R):
        return True
    ok = pairwise_commuting(G, fixed_set(phi))
    if ok and notes is not None:
        notes.append("fixed set commutative (R2^2 != 0)")
    return ok


def condition_four(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution, notes: list | None = None) -> bool:
    _require_nonabelian(G)
    if R.characteristic != 3:
        return False
    Gd = commutator_subgroup(G)
    if len(Gd) != 3 or not quotient_is_fully_fixed(phi, Gd):
        return False
    return all(phi(G.power(g, 3)) == G.power(g, 3) for g in range(G.order))


def classify(R: FiniteRing, G: FiniteGroup, phi: GroupInvolution) -> Verdict:
    if R.is_char_two:
        raise OutOfScope(f"{R} has characteristic 2")
    _require_nonabelian(G)
    notes: list[str] = []
    report = ConditionReport(
        condition_one(R, G, phi, notes),
        condition_two(R, G, phi, notes),
        condition_three(R, G, phi, notes),
        condition_four(R, G, phi, notes),
        notes,
    )
    return Verdict(generators_commute(R, G, phi), report)


def in_scope(R: FiniteRing, G: FiniteGroup) -> bool:
    return not R.is_char_two and not is_abelian(G)


@dataclass
class Triple:
    ring: FiniteRing
    group: FiniteGroup
    involution: GroupInvolution
    index: int = 0


@dataclass
class SweepSummary:
    total: int = 0
    commuting: int = 0
    condition_counts: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0})
    failures: list = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return not self.failures


def _classify_record(t: Triple) -> dict:
    v = classify(t.ring, t.group, t.involution)
    return v.to_record(t.group.name, t.ring.label, t.index)


def verify_equivalence(universe, jobs: int = 1) -> SweepSummary:
    """Classify every triple and collect those where the equivalence fails.

    Records come back in input order whatever the worker count.
    """
    triples = [t if isinstance(t, Triple) else Triple(*t) for t in universe]
    if jobs > 1 and len(triples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_classify_record, triples, chunksize=8))
    else:
        records = [_classify_record(t) for t in triples]

    summary = SweepSummary()
    for rec in records:
        summary.total += 1
        summary.commuting += rec["commutes"]
        for i in range(1, 5):
            summary.condition_counts[i] += rec[f"cond{i}"]
        if not rec["theorem_ok"]:
            summary.failures.append(rec)
    summary.records = records
    return summary


def default_jobs() -> int:
    return max(1, os.cpu_count() or 1)

