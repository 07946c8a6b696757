"""Command line front end.

    antisym verify --groups D4,Dic2 --rings Z3,Z4 --involutions all --out report.jsonl
    antisym classify --group D4 --ring Z4 --involution classical
    antisym involutions --group C2xC2
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import group as grp
from .group import FiniteGroup, GroupError, is_abelian
from .group_ring import DEFAULT_MODULE_CAP, ModuleCapExceeded, module_commutes_exhaustive, module_size
from .involution import (
    InvolutionError,
    classical_involution,
    conjugate_classical_involution,
    enumerate_involutions,
    fixed_set,
)
from .lemmas import k_index
from .ring import FiniteRing, RingError, make_cyclic_ring, make_product_ring
from .theorem import classify, default_jobs
from .universe import GROUP_SPECS, RING_SPECS

RECORD_FIELDS = (
    "group", "ring", "involution", "commutes",
    "cond1", "cond2", "cond3", "cond4", "theorem_ok", "notes",
)


class SpecError(ValueError):
    pass


# --- DSL ----------------------------------------------------------------------

_RING_RE = re.compile(r"z(\d+)(?:xz(\d+))*")
_GROUP_FACTOR_RE = re.compile(r"(dic|c|d|s)(\d+)|h27")


def parse_ring_spec(s: str) -> FiniteRing:
    text = s.lower()
    if not _RING_RE.fullmatch(text):
        raise SpecError(f"bad ring spec {s!r}")
    try:
        factors = [make_cyclic_ring(int(part[1:])) for part in text.split("x")]
        return make_product_ring(factors)
    except RingError as exc:
        raise SpecError(f"bad ring spec {s!r}: {exc}") from exc


def _group_factor(text: str) -> FiniteGroup:
    m = _GROUP_FACTOR_RE.fullmatch(text)
    if not m:
        raise SpecError(f"bad group factor {text!r}")
    if text == "h27":
        return grp.heisenberg27()
    kind, n = m.group(1), int(m.group(2))
    builders = {"c": grp.cyclic, "d": grp.dihedral, "dic": grp.dicyclic, "s": grp.symmetric}
    try:
        return builders[kind](n)
    except GroupError as exc:
        raise SpecError(str(exc)) from exc


def parse_group_spec(s: str) -> FiniteGroup:
    if s.startswith("file:"):
        try:
            return grp.load_cayley_json(s[5:])
        except (OSError, ValueError) as exc:
            raise SpecError(f"cannot load {s[5:]!r}: {exc}") from exc
    if not s or any(c.isspace() for c in s):
        raise SpecError(f"bad group spec {s!r}")
    parts = [_group_factor(p) for p in s.lower().split("x")]
    G = parts[0]
    for H in parts[1:]:
        G = grp.direct_product(G, H)
    G.name = s
    return G


def select_involutions(G: FiniteGroup, selector: str):
    """Returns [(index, involution)]; index is -1 when not from enumeration."""
    if selector == "all":
        return list(enumerate(enumerate_involutions(G)))
    if selector == "classical":
        return [(_enum_index(G, classical_involution(G)), classical_involution(G))]
    if selector.startswith("conj:"):
        try:
            x = int(selector[5:])
            phi = conjugate_classical_involution(G, x)
        except (ValueError, IndexError, InvolutionError) as exc:
            raise SpecError(f"bad involution selector {selector!r}: {exc}") from exc
        return [(_enum_index(G, phi), phi)]
    if selector.startswith("idx:"):
        invs = enumerate_involutions(G)
        try:
            k = int(selector[4:])
        except ValueError:
            raise SpecError(f"bad involution selector {selector!r}") from None
        if not 0 <= k < len(invs):
            raise SpecError(f"{selector}: {G.name} has {len(invs)} involutions")
        return [(k, invs[k])]
    raise SpecError(f"unknown involution selector {selector!r}")


def _enum_index(G, phi) -> int:
    for k, psi in enumerate(enumerate_involutions(G)):
        if psi.perm == phi.perm:
            return k
    return -1


# --- runs ---------------------------------------------------------------------

@dataclass
class RunConfig:
    groups: list[str]
    rings: list[str]
    involutions: str = "all"
    out: str = "-"
    jobs: int = 1
    cap: int = DEFAULT_MODULE_CAP
    csv: bool = False

    def __post_init__(self):
        if not self.groups or not self.rings:
            raise SpecError("need at least one group and one ring")
        if self.jobs < 1:
            raise SpecError("job count must be >= 1")


def _skipped(group: str, ring: str, idx: int, why: str) -> dict:
    rec = dict.fromkeys(RECORD_FIELDS)
    rec.update(group=group, ring=ring, involution=idx, notes=[f"skipped: {why}"])
    return rec


def _evaluate(args) -> dict:
    G, R, idx, phi, cap = args
    v = classify(R, G, phi)
    rec = v.to_record(G.name, R.label, idx)
    if cap > 0:
        try:
            size = module_size(R, G, phi, cap)
            agree = module_commutes_exhaustive(R, G, phi, cap) == v.commutes
            rec["notes"].append(f"module-oracle: {'agrees' if agree else 'DISAGREES'} (|M|={size})")
            if not agree:
                rec["theorem_ok"] = False
        except ModuleCapExceeded:
            rec["notes"].append(f"module-oracle: skipped (|M|>{cap})")
    return rec


def run_verify(config: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    groups = [parse_group_spec(g) for g in config.groups]
    rings = [parse_ring_spec(r) for r in config.rings]

    try:
        sink = stdout if config.out == "-" else open(config.out, "w", newline="")
    except OSError as exc:
        print(f"error: cannot write {config.out}: {exc}", file=sys.stderr)
        return 2

    # slots hold either a finished (skipped) record or a job
    slots: list = []
    for G in groups:
        invs = select_involutions(G, config.involutions)
        for R in rings:
            for idx, phi in invs:
                if is_abelian(G):
                    slots.append(_skipped(G.name, R.label, idx, "abelian group"))
                elif R.is_char_two:
                    slots.append(_skipped(G.name, R.label, idx, "characteristic 2"))
                else:
                    slots.append((G, R, idx, phi, config.cap))
    jobs = [s for s in slots if isinstance(s, tuple)]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            done = iter(list(pool.map(_evaluate, jobs, chunksize=4)))
    else:
        done = iter([_evaluate(j) for j in jobs])
    records = [next(done) if isinstance(s, tuple) else s for s in slots]

    try:
        if config.csv:
            write_csv(records, sink)
        else:
            for rec in records:
                sink.write(json.dumps(rec) + "\n")
    finally:
        if sink is not stdout:
            sink.close()

    checked = [r for r in records if r["theorem_ok"] is not None]
    bad = [r for r in checked if not r["theorem_ok"]]
    print(
        f"verified {len(checked)} triples, skipped {len(records) - len(checked)}, "
        f"failures {len(bad)}",
        file=sys.stderr,
    )
    return 1 if bad else 0


def write_csv(records, sink) -> None:
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for rec in records:
        row = []
        for k in RECORD_FIELDS:
            v = rec[k]
            row.append(";".join(v) if k == "notes" else ("" if v is None else v))
        w.writerow(row)


def run_classify(group: str, ring: str, involution: str, stdout=None) -> int:
    stdout = stdout or sys.stdout
    G = parse_group_spec(group)
    R = parse_ring_spec(ring)
    [(idx, phi)] = select_involutions(G, involution)
    if is_abelian(G) or R.is_char_two:
        raise SpecError("triple is out of scope (abelian group or characteristic 2)")
    v = classify(R, G, phi)
    held = ", ".join(f"cond{i}" for i in v.report.holding()) or "none"
    print(f"{G.name} over {R} with {phi.label}", file=stdout)
    print(f"  antisymmetric elements commute: {v.commutes}", file=stdout)
    print(f"  conditions holding: {held}", file=stdout)
    print(f"  theorem_ok: {v.theorem_ok}", file=stdout)
    print(json.dumps(v.to_record(G.name, R.label, idx)), file=stdout)
    return 0 if v.theorem_ok else 1


def run_involutions(group: str, stdout=None) -> int:
    stdout = stdout or sys.stdout
    G = parse_group_spec(group)
    invs = enumerate_involutions(G)
    print(f"{G.name}: {len(invs)} involutions", file=stdout)
    for k, phi in enumerate(invs):
        tag = " classical" if phi.perm == tuple(int(x) for x in G.inverse) else ""
        print(f"  idx:{k}  fixed={len(fixed_set(phi))}  K-index={k_index(phi)}{tag}", file=stdout)
    return 0


# --- argparse -----------------------------------------------------------------

def _split_list(values) -> list[str]:
    out = []
    for v in values:
        out.extend(x for x in v.split(",") if x)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antisym", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="classify every triple and check the equivalence")
    v.add_argument("--groups", nargs="+", default=list(GROUP_SPECS))
    v.add_argument("--rings", nargs="+", default=list(RING_SPECS))
    v.add_argument("--involutions", default="all")
    v.add_argument("--out", default="-")
    v.add_argument("--jobs", type=int, default=default_jobs())
    v.add_argument("--cap", type=int, default=DEFAULT_MODULE_CAP,
                   help="module-oracle size cap, 0 disables the oracle")
    v.add_argument("--csv", action="store_true")

    c = sub.add_parser("classify", help="classify a single triple")
    c.add_argument("--group", required=True)
    c.add_argument("--ring", required=True)
    c.add_argument("--involution", default="classical")

    i = sub.add_parser("involutions", help="list the involutions of a group")
    i.add_argument("--group", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            config = RunConfig(
                _split_list(args.groups), _split_list(args.rings), args.involutions,
                args.out, args.jobs, args.cap, args.csv,
            )
            return run_verify(config)
        if args.command == "classify":
            return run_classify(args.group, args.ring, args.involution)
        return run_involutions(args.group)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
