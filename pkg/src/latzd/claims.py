"""Checkers for the numbered statements, plus the built-in fixtures.

Each checker evaluates one statement on a single (lattice, ideal)
instance and returns a :class:`ClaimReport` with status HOLDS, FAILS or
VACUOUS.  FAILS always carries a witness that re-checks against the
instance; VACUOUS means the statement's hypothesis was not satisfied.
Preconditions (e.g. distributivity) are enforced with exceptions; the
census harness converts those into VACUOUS entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .lattice import Lattice, LatticeSpec, build_lattice, is_distributive
from .ideals import (
    IdealSet,
    RadicalVariant,
    is_finite_intersection_of_primes,
    is_ideal,
    make_ideal,
    radical,
    require_ideal,
)
from . import zdgraph
from .zdgraph import build_gamma, build_gamma_I, graphs_isomorphic, induced_subgraph

HOLDS = "HOLDS"
FAILS = "FAILS"
VACUOUS = "VACUOUS"


class PreconditionError(ValueError):
    """The claim's stated precondition is violated by the instance."""


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    status: str
    witness: Optional[dict] = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status == FAILS and self.witness is None:
            raise ValueError("FAILS report requires a witness")

    def render(self) -> str:
        parts = [self.claim_id, self.status]
        if self.witness:
            parts.append(
                " ".join(f"{k}={v}" for k, v in sorted(self.witness.items()))
            )
        return " ".join(parts)


def _require_distributive(L: Lattice):
    if not is_distributive(L):
        raise PreconditionError("lattice is not distributive")


def _labels(L: Lattice, xs) -> str:
    return "{" + ",".join(L.labels[x] for x in sorted(xs)) + "}"


def check_P1_3(L: Lattice, I: IdealSet) -> ClaimReport:
    """Connectivity, diameter <= 3, and girth <= 7 when a cycle exists.

    The source states this for a "proper filter"; every surrounding use
    treats I as an ideal, so the ideal reading is checked and the
    wording discrepancy is recorded in the notes.
    """
    require_ideal(L, I, proper=True)
    notes = ("source says 'proper filter'; checked with the ideal reading",)
    G = build_gamma_I(L, I)
    if G.n <= 1:
        return ClaimReport("P1.3", VACUOUS, notes=notes + ("graph has <= 1 vertex",))
    inv = zdgraph.invariants(G)
    notes = notes + (
        f"diameter={'INFINITE' if inv.diameter is None else inv.diameter}",
        f"girth={'ACYCLIC' if inv.girth is None else inv.girth}",
    )
    if not inv.connected:
        return ClaimReport("P1.3", FAILS, witness={"reason": "disconnected"}, notes=notes)
    if inv.diameter > 3:
        return ClaimReport(
            "P1.3", FAILS, witness={"diameter": inv.diameter}, notes=notes
        )
    if inv.girth is not None and inv.girth > 7:
        return ClaimReport("P1.3", FAILS, witness={"girth": inv.girth}, notes=notes)
    return ClaimReport("P1.3", HOLDS, notes=notes)


def _cycle_through_path_leq4(G: zdgraph.ZdGraph, a: int, x: int, y: int) -> bool:
    # Local indices.  Triangle a-x-y-a, or a 4-cycle a-x-y-w-a.
    if G.adjacency[a][y]:
        return True
    for w in range(G.n):
        if w in (a, x, y):
            continue
        if G.adjacency[y][w] and G.adjacency[w][a]:
            return True
    return False


def check_L1_4(L: Lattice, I: IdealSet) -> ClaimReport:
    """Every 2-path a-x-y either extends I u {x} to an ideal or sits on
    a cycle of length at most 4."""
    _require_distributive(L)
    require_ideal(L, I, proper=True)
    G = build_gamma_I(L, I)
    elem = G.vertex_elements
    found_path = False
    branch_notes = set()
    for x in range(G.n):
        nbrs = G.neighbors(x)
        for a in nbrs:
            for y in nbrs:
                if a >= y:
                    continue
                found_path = True
                if is_ideal(L, I.members | {elem[x]}):
                    branch_notes.add("ideal-branch")
                    continue
                if _cycle_through_path_leq4(G, a, x, y):
                    branch_notes.add("cycle-branch")
                    continue
                return ClaimReport(
                    "L1.4",
                    FAILS,
                    witness={
                        "path": f"{L.labels[elem[a]]}-{L.labels[elem[x]]}-{L.labels[elem[y]]}"
                    },
                )
    if not found_path:
        return ClaimReport("L1.4", VACUOUS, notes=("no path of length 2",))
    return ClaimReport("L1.4", HOLDS, notes=tuple(sorted(branch_notes)))


def _edge_on_short_cycle(G: zdgraph.ZdGraph, u: int, v: int) -> bool:
    # Edge u-v on a 3-cycle (common neighbor) or a 4-cycle u-v-t-w-u.
    for w in range(G.n):
        if w not in (u, v) and G.adjacency[u][w] and G.adjacency[v][w]:
            return True
    for t in range(G.n):
        if t in (u, v) or not G.adjacency[v][t]:
            continue
        for w in range(G.n):
            if w in (u, v, t) or not G.adjacency[t][w]:
                continue
            if G.adjacency[w][u]:
                return True
    return False


def check_T1_5(L: Lattice, I: IdealSet, part: str = "both") -> ClaimReport:
    """Core is a union of 3- or 4-cycles (a); every vertex of a graph
    with >= 3 vertices is in the core or has degree one (b)."""
    _require_distributive(L)
    require_ideal(L, I, proper=True)
    claim_id = {"a": "T1.5a", "b": "T1.5b", "both": "T1.5"}[part]
    G = build_gamma_I(L, I)
    inv = zdgraph.invariants(G)
    if inv.girth is None:
        return ClaimReport(claim_id, VACUOUS, notes=("no cycle",))
    pos = {e: i for i, e in enumerate(G.vertex_elements)}
    if part in ("a", "both"):
        for (ea, eb) in sorted(inv.core_edges):
            if not _edge_on_short_cycle(G, pos[ea], pos[eb]):
                return ClaimReport(
                    claim_id,
                    FAILS,
                    witness={"core_edge": f"{L.labels[ea]}-{L.labels[eb]}"},
                )
    if part in ("b", "both") and G.n >= 3:
        for i, e in enumerate(G.vertex_elements):
            if e not in inv.core_vertices and G.degree(i) != 1:
                return ClaimReport(
                    claim_id,
                    FAILS,
                    witness={"vertex": L.labels[e], "degree": G.degree(i)},
                )
    return ClaimReport(claim_id, HOLDS)


def check_CASE4(L: Lattice, I: IdealSet) -> ClaimReport:
    """No path a-x-y-b with degree(a)=1, x and y outside the core, and
    b inside the core (the impossible case of the core theorem)."""
    require_ideal(L, I, proper=True)
    G = build_gamma_I(L, I)
    inv = zdgraph.invariants(G)
    if inv.girth is None:
        return ClaimReport("CASE4", VACUOUS, notes=("no cycle",))
    elem = G.vertex_elements
    core = inv.core_vertices
    for a in range(G.n):
        if G.degree(a) != 1:
            continue
        for x in G.neighbors(a):
            if elem[x] in core:
                continue
            for y in G.neighbors(x):
                if y == a or elem[y] in core:
                    continue
                for b in G.neighbors(y):
                    if b in (a, x) or elem[b] not in core:
                        continue
                    path = "-".join(L.labels[elem[v]] for v in (a, x, y, b))
                    return ClaimReport("CASE4", FAILS, witness={"path": path})
    return ClaimReport("CASE4", HOLDS)


def check_P1_6(L: Lattice, I: IdealSet) -> ClaimReport:
    """If the upper sets of the ideal's members intersect to {top}, the
    graph has no cut point."""
    _require_distributive(L)
    require_ideal(L, I, proper=True)
    hypothesis = frozenset(L.elements())
    for a in sorted(I.members):
        hypothesis &= L.upper_set(a)
    if hypothesis != frozenset({L.top}):
        return ClaimReport(
            "P1.6",
            VACUOUS,
            notes=(f"upper-set intersection {_labels(L, hypothesis)} != {{top}}",),
        )
    G = build_gamma_I(L, I)
    inv = zdgraph.invariants(G)
    if inv.cut_vertices:
        return ClaimReport(
            "P1.6",
            FAILS,
            witness={"cut_vertices": _labels(L, inv.cut_vertices)},
        )
    return ClaimReport("P1.6", HOLDS)


def check_P2_1(L: Lattice, I: IdealSet, variant: RadicalVariant) -> ClaimReport:
    """Radical of an ideal of a distributive lattice equals the ideal."""
    _require_distributive(L)
    require_ideal(L, I, proper=True)
    claim_id = f"P2.1-{variant.name}"
    result = radical(L, I, variant)
    if result.value is None:
        return ClaimReport(claim_id, VACUOUS, notes=("no qualifying prime",))
    if result.value == I.members:
        return ClaimReport(
            claim_id, HOLDS, notes=(f"family_size={result.family_size}",)
        )
    return ClaimReport(
        claim_id,
        FAILS,
        witness={"radical": _labels(L, result.value), "ideal": _labels(L, I.members)},
        notes=(f"family_size={result.family_size}",),
    )


def check_T2_3(L: Lattice, I: IdealSet) -> ClaimReport:
    """Finite chromatic/clique numbers vs I being a finite intersection
    of primes.  On finite instances (i) and (ii) hold trivially, so the
    falsifiable content is (iii); both radical variants are recorded."""
    _require_distributive(L)
    require_ideal(L, I, proper=True)
    G = build_gamma_I(L, I)
    inv = zdgraph.invariants(G)
    per_variant = {}
    notes = [f"omega={inv.clique_number}", f"chi={inv.chromatic_number}"]
    for variant in RadicalVariant:
        witness_family = is_finite_intersection_of_primes(L, I, variant)
        per_variant[variant.name] = witness_family
        if witness_family is None:
            notes.append(f"(iii)-{variant.name}=no")
        else:
            fam = " ".join(_labels(L, P.members) for P in witness_family)
            notes.append(f"(iii)-{variant.name}=yes [{fam}]")
    if any(v is not None for v in per_variant.values()):
        return ClaimReport("T2.3", HOLDS, notes=tuple(notes))
    return ClaimReport(
        "T2.3",
        FAILS,
        witness={"ideal": _labels(L, I.members), "reason": "no prime family under either variant"},
        notes=tuple(notes),
    )


def check_GAMMA0(L: Lattice, I: Optional[IdealSet] = None) -> ClaimReport:
    """The corrected relationship: the graph relative to the trivial
    ideal equals the classic graph with its bottom vertex deleted, and
    is *not* isomorphic to the full classic graph when the latter is
    non-empty.  Ignores the ideal argument (the trivial ideal is fixed
    by the statement)."""
    if L.n < 2:
        return ClaimReport("GAMMA0", VACUOUS, notes=("lattice has < 2 elements",))
    gamma = build_gamma(L)
    trivial = make_ideal(L, {L.bottom})
    gamma_0 = build_gamma_I(L, trivial)
    nonzero = [v for v in gamma.vertex_elements if v != L.bottom]
    pruned = induced_subgraph(gamma, nonzero)
    if graphs_isomorphic(gamma_0, pruned) is None:
        return ClaimReport(
            "GAMMA0",
            FAILS,
            witness={"reason": "gamma_0 not isomorphic to gamma minus bottom"},
        )
    if gamma.n > 0 and graphs_isomorphic(gamma_0, gamma) is not None:
        return ClaimReport(
            "GAMMA0",
            FAILS,
            witness={"reason": "gamma_0 unexpectedly isomorphic to gamma"},
        )
    if gamma.n == 0:
        return ClaimReport("GAMMA0", VACUOUS, notes=("classic graph empty",))
    return ClaimReport("GAMMA0", HOLDS)


# --- claim registry -------------------------------------------------------

@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    checker: Callable[[Lattice, IdealSet], ClaimReport]
    needs_distributive: bool


CLAIMS: dict[str, ClaimSpec] = {}


def _register(claim_id: str, checker, needs_distributive: bool):
    CLAIMS[claim_id] = ClaimSpec(claim_id, checker, needs_distributive)


_register("P1.3", check_P1_3, False)
_register("L1.4", check_L1_4, True)
_register("T1.5a", lambda L, I: check_T1_5(L, I, part="a"), True)
_register("T1.5b", lambda L, I: check_T1_5(L, I, part="b"), True)
_register("CASE4", check_CASE4, False)
_register("P1.6", check_P1_6, True)
_register(
    "P2.1-CONTAINED",
    lambda L, I: check_P2_1(L, I, RadicalVariant.CONTAINED),
    True,
)
_register(
    "P2.1-CONTAINING",
    lambda L, I: check_P2_1(L, I, RadicalVariant.CONTAINING),
    True,
)
_register("T2.3", check_T2_3, True)
_register("GAMMA0", check_GAMMA0, False)


def run_claim(claim_id: str, L: Lattice, I: IdealSet) -> ClaimReport:
    """Run a registered claim; unmet preconditions come back VACUOUS."""
    try:
        spec = CLAIMS[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim id {claim_id!r}") from None
    try:
        return spec.checker(L, I)
    except (PreconditionError, ValueError) as exc:
        return ClaimReport(claim_id, VACUOUS, notes=(f"precondition: {exc}",))


# --- fixtures -------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    name: str
    lattice: Lattice
    distinguished_ideals: tuple[tuple[str, IdealSet], ...]


FIGURE1_TEXT = """\
elements: 0 c x a y b z d 1
covers: 0<c, 0<x, c<a, c<y, x<y, x<b,
        a<z, y<z, y<d, b<d, z<1, d<1
"""


def figure1() -> Lattice:
    """The nine-element distributive lattice of the worked example."""
    from .lattice import parse_lattice

    return build_lattice(parse_lattice(FIGURE1_TEXT))


def fixture_example_1_7(n: int = 6) -> Lattice:
    """Finite truncation of the non-distributive inclusion lattice.

    Elements: the empty set, {3}, {1}, {1,2}, the chain {4..k} for
    4 <= k <= n, and the top {1..n}, ordered by inclusion.
    """
    if n < 6:
        raise ValueError("truncation requires n >= 6")
    sets: list[tuple[str, frozenset[int]]] = [
        ("∅", frozenset()),
        ("{3}", frozenset({3})),
        ("{1}", frozenset({1})),
        ("{12}", frozenset({1, 2})),
    ]
    for k in range(4, n + 1):
        label = "{4}" if k == 4 else f"{{4-{k}}}"
        sets.append((label, frozenset(range(4, k + 1))))
    sets.append((f"{{1-{n}}}", frozenset(range(1, n + 1))))
    labels = [lab for lab, _ in sets]
    covers = []
    by_label = dict(sets)
    for la, sa in sets:
        for lb, sb in sets:
            if not sa < sb or any(
                sa < sc < sb for lc, sc in sets if lc not in (la, lb)
            ):
                continue
            covers.append((la, lb))
    return build_lattice(LatticeSpec(tuple(labels), tuple(covers)))


def example_1_7_chain_ideal(L: Lattice) -> IdealSet:
    """The distinguished chain ideal of the truncation fixture."""
    members = {L.bottom}
    members.update(
        i for i, lab in enumerate(L.labels) if lab == "{4}" or lab.startswith("{4-")
    )
    return make_ideal(L, members)


def paper_fixtures() -> list[Fixture]:
    fig1 = figure1()
    trivial = make_ideal(fig1, {fig1.bottom})
    pz = make_ideal(fig1, fig1.principal_ideal(fig1.index_of("z")))
    trunc = fixture_example_1_7(6)
    chain = example_1_7_chain_ideal(trunc)
    return [
        Fixture("figure1", fig1, (("{0}", trivial), ("(z]", pz))),
        Fixture("example1.7-n6", trunc, (("chain", chain),)),
    ]
