"""Exhaustive enumeration of small lattices and claim sweeps over them.

The generator builds every lattice up to isomorphism by enumerating the
interior poset (the lattice with its bounds removed) as an
upper-triangular strict order, adjoining a fresh bottom and top,
rejecting non-lattices, and deduplicating with exact isomorphism tests
behind an invariant-profile pre-filter.  Claim evaluation can fan out
to a worker pool; aggregation preserves producer order, so output is
identical for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .lattice import (
    Lattice,
    LatticeError,
    LatticeSpec,
    build_lattice,
    invariant_profile,
    is_distributive,
    lattices_isomorphic,
)
from .ideals import IdealSet, enumerate_ideals, make_ideal
from .claims import CLAIMS, FAILS, ClaimReport, run_claim

IDEAL_FILTERS = ("ALL", "PROPER", "PRINCIPAL")


@dataclass(frozen=True)
class CensusConfig:
    max_size: int = 7
    distributive_only: bool = False
    claims: tuple[str, ...] = tuple(sorted(CLAIMS))
    ideal_filter: str = "PROPER"
    worker_count: int = 1

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be >= 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.ideal_filter not in IDEAL_FILTERS:
            raise ValueError(f"ideal_filter must be one of {IDEAL_FILTERS}")
        for cid in self.claims:
            if cid not in CLAIMS:
                raise ValueError(f"unknown claim id {cid!r}")


@dataclass(frozen=True)
class InstanceResult:
    lattice_id: str
    size: int
    ideal_labels: str
    report: ClaimReport


@dataclass(frozen=True)
class Counterexample:
    lattice_id: str
    lattice_text: str
    ideal_labels: str
    claim_id: str
    report: ClaimReport


@dataclass
class CensusSummary:
    lattice_counts: dict[int, int]
    instance_count: int
    per_claim: dict[str, dict[str, int]]
    counterexamples: list[Counterexample]
    rows: list[InstanceResult]

    def render(self) -> str:
        lines = ["size  lattices"]
        for size in sorted(self.lattice_counts):
            lines.append(f"{size:<6}{self.lattice_counts[size]}")
        lines.append(f"instances: {self.instance_count}")
        lines.append(f"{'claim':<18}{'HOLDS':>8}{'FAILS':>8}{'VACUOUS':>9}")
        for cid in sorted(self.per_claim):
            c = self.per_claim[cid]
            lines.append(
                f"{cid:<18}{c.get('HOLDS', 0):>8}{c.get('FAILS', 0):>8}"
                f"{c.get('VACUOUS', 0):>9}"
            )
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        for ce in self.counterexamples:
            lines.append(
                f"  {ce.lattice_id} ideal={ce.ideal_labels} {ce.report.render()}"
            )
        return "\n".join(lines) + "\n"


def _transitive_upper_relations(k: int) -> Iterator[frozenset[tuple[int, int]]]:
    """All transitive strict orders on 0..k-1 compatible with index order."""
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for bits in range(1 << len(pairs)):
        rel = {pairs[t] for t in range(len(pairs)) if bits >> t & 1}
        if all(
            (i, l) in rel
            for (i, j) in rel
            for (j2, l) in rel
            if j2 == j
        ):
            yield frozenset(rel)


def _lattice_from_interior(n: int, rel: frozenset[tuple[int, int]]) -> Optional[Lattice]:
    """Adjoin bounds to an interior poset; None if the result is not a lattice."""
    k = n - 2
    labels = tuple(str(i) for i in range(n))
    # element 0 = bottom, 1..k = interior shifted by one, n-1 = top
    covers = []
    strict_down = {i: {a for (a, b) in rel if b == i} for i in range(k)}
    strict_up = {i: {b for (a, b) in rel if a == i} for i in range(k)}
    for (a, b) in rel:
        if not any((a, m) in rel and (m, b) in rel for m in range(a + 1, b)):
            covers.append((labels[a + 1], labels[b + 1]))
    for i in range(k):
        if not strict_down[i]:
            covers.append((labels[0], labels[i + 1]))
        if not strict_up[i]:
            covers.append((labels[i + 1], labels[n - 1]))
    if k == 0:
        covers.append((labels[0], labels[n - 1]))
    try:
        return build_lattice(LatticeSpec(labels, tuple(covers)))
    except LatticeError:
        return None


def enumerate_lattices(max_size: int) -> Iterator[Lattice]:
    """One representative per isomorphism class, sizes 1..max_size,
    in a deterministic order."""
    if max_size >= 1:
        yield build_lattice(LatticeSpec(("0",), ()))
    for n in range(2, max_size + 1):
        kept: list[tuple[tuple, Lattice]] = []
        for rel in _transitive_upper_relations(n - 2):
            L = _lattice_from_interior(n, rel)
            if L is None:
                continue
            profile = invariant_profile(L)
            duplicate = any(
                prof == profile and lattices_isomorphic(L, rep) is not None
                for prof, rep in kept
            )
            if not duplicate:
                kept.append((profile, L))
                yield L


def _ideals_for(L: Lattice, ideal_filter: str) -> list[IdealSet]:
    ideals = enumerate_ideals(L)
    if ideal_filter == "PROPER":
        return [I for I in ideals if I.is_proper]
    if ideal_filter == "PRINCIPAL":
        principal = {frozenset(L.principal_ideal(a)) for a in L.elements()}
        return [I for I in ideals if I.is_proper and I.members in principal]
    return ideals


def _evaluate_lattice(args) -> list[InstanceResult]:
    lattice_id, L, claim_ids, ideal_filter = args
    out = []
    for I in _ideals_for(L, ideal_filter):
        labels = I.label_str(L)
        for cid in claim_ids:
            out.append(InstanceResult(lattice_id, L.n, labels, run_claim(cid, L, I)))
    return out


def run_census(config: CensusConfig) -> CensusSummary:
    tasks = []
    lattice_counts: dict[int, int] = {s: 0 for s in range(1, config.max_size + 1)}
    index_in_size: dict[int, int] = {}
    lattice_by_id: dict[str, Lattice] = {}
    for L in enumerate_lattices(config.max_size):
        if config.distributive_only and not is_distributive(L):
            continue
        lattice_counts[L.n] += 1
        idx = index_in_size.get(L.n, 0)
        index_in_size[L.n] = idx + 1
        lattice_id = f"L{L.n}.{idx}"
        lattice_by_id[lattice_id] = L
        tasks.append((lattice_id, L, config.claims, config.ideal_filter))

    if config.worker_count > 1 and len(tasks) > 1:
        with multiprocessing.Pool(config.worker_count) as pool:
            batches = pool.map(_evaluate_lattice, tasks, chunksize=4)
    else:
        batches = [_evaluate_lattice(t) for t in tasks]

    rows: list[InstanceResult] = []
    per_claim: dict[str, dict[str, int]] = {cid: {} for cid in config.claims}
    counterexamples: list[Counterexample] = []
    instance_count = 0
    seen_instances = set()
    for batch in batches:
        for r in batch:
            rows.append(r)
            key = (r.lattice_id, r.ideal_labels)
            if key not in seen_instances:
                seen_instances.add(key)
                instance_count += 1
            counts = per_claim[r.report.claim_id]
            counts[r.report.status] = counts.get(r.report.status, 0) + 1
            if r.report.status == FAILS:
                counterexamples.append(
                    Counterexample(
                        lattice_id=r.lattice_id,
                        lattice_text=lattice_by_id[r.lattice_id].serialize(),
                        ideal_labels=r.ideal_labels,
                        claim_id=r.report.claim_id,
                        report=r.report,
                    )
                )
    return CensusSummary(
        lattice_counts=lattice_counts,
        instance_count=instance_count,
        per_claim=per_claim,
        counterexamples=counterexamples,
        rows=rows,
    )


def search_counterexample(
    claim_id: str, max_size: int
) -> Optional[tuple[Lattice, IdealSet, ClaimReport]]:
    """First FAILS instance in deterministic enumeration order, if any."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim id {claim_id!r}")
    for L in enumerate_lattices(max_size):
        for I in _ideals_for(L, "PROPER"):
            report = run_claim(claim_id, L, I)
            if report.status == FAILS:
                return L, I, report
    return None
