"""Command-line interface.

Subcommands: check, ideals, zdgraph, radical, verify-paper, census,
search.  Exit codes: 0 success / claim holds, 1 usage or parse error,
2 claim failed or counterexample found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import census as census_mod
from . import claims as claims_mod
from . import ideals as ideals_mod
from . import zdgraph as zd
from .claims import CLAIMS, FAILS, HOLDS, VACUOUS
from .ideals import RadicalVariant, make_ideal
from .lattice import (
    Lattice,
    LatticeError,
    find_forbidden_sublattice,
    is_distributive,
    is_modular,
    lattice_from_text,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_lattice(path: str) -> Lattice:
    return lattice_from_text(Path(path).read_text())


def _add_ideal_flags(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--ideal", metavar="LABELS",
        help="comma-separated element labels of the ideal",
    )
    group.add_argument(
        "--ideal-principal", metavar="LABEL",
        help="use the principal ideal generated by this element",
    )


def _resolve_ideal(L: Lattice, args) -> ideals_mod.IdealSet:
    if args.ideal:
        members = {L.index_of(lab.strip()) for lab in args.ideal.split(",")}
    elif args.ideal_principal:
        members = set(L.principal_ideal(L.index_of(args.ideal_principal)))
    else:
        members = {L.bottom}
    I = make_ideal(L, members)
    if not I.is_ideal:
        raise LatticeError(f"set {I.label_str(L)} is not an ideal")
    return I


def cmd_check(args) -> int:
    L = _load_lattice(args.file)
    print(f"elements: {L.n}")
    print(f"bottom: {L.labels[L.bottom]}")
    print(f"top: {L.labels[L.top]}")
    print(f"distributive: {'yes' if is_distributive(L) else 'no'}")
    print(f"modular: {'yes' if is_modular(L) else 'no'}")
    witness = find_forbidden_sublattice(L)
    if witness is not None:
        emb = ",".join(L.labels[e] for e in witness.embedding)
        print(f"forbidden sublattice: {witness.kind} on {{{emb}}}")
    return EXIT_OK


def cmd_ideals(args) -> int:
    L = _load_lattice(args.file)
    ideals = ideals_mod.enumerate_ideals(L)
    if args.prime:
        ideals = [I for I in ideals if I.is_prime]
    for I in ideals:
        flags = []
        if I.is_prime:
            flags.append("prime")
        if not I.is_proper:
            flags.append("improper")
        suffix = f" ({', '.join(flags)})" if flags else ""
        print(I.label_str(L) + suffix)
    print(f"total: {len(ideals)}")
    return EXIT_OK


def cmd_zdgraph(args) -> int:
    L = _load_lattice(args.file)
    if args.gamma_classic:
        G = zd.build_gamma(L)
    else:
        I = _resolve_ideal(L, args)
        if not I.is_proper:
            raise LatticeError("ideal must be proper (I != L)")
        G = zd.build_gamma_I(L, I)
    if args.dot:
        sys.stdout.write(zd.to_dot(G))
        return EXIT_OK
    print(f"|V| = {G.n}")
    sys.stdout.write(zd.invariants_report(G))
    if args.figure:
        from .report import graph_figure

        graph_figure(G, Path(args.figure))
        print(f"figure: {args.figure}")
    return EXIT_OK


def cmd_radical(args) -> int:
    L = _load_lattice(args.file)
    I = _resolve_ideal(L, args)
    variant = RadicalVariant(args.variant)
    family = ideals_mod._qualifying_primes(L, I, variant)
    print(f"ideal: {I.label_str(L)}")
    print(f"variant: {variant.value}")
    if not family:
        direction = "contained in" if variant is RadicalVariant.CONTAINED else "containing"
        print(f"no prime {direction} I (family_size 0)")
        return EXIT_OK
    for P in family:
        print(f"prime: {P.label_str(L)}")
    result = ideals_mod.radical(L, I, variant)
    value = make_ideal(L, result.value)
    relation = "=" if result.value == I.members else "!="
    print(f"radical = {value.label_str(L)} {relation} I")
    return EXIT_OK


def _fig1_golden_facts():
    """The built-in verification suite over the worked-example fixtures."""
    fig1 = claims_mod.figure1()
    trivial = make_ideal(fig1, {fig1.bottom})
    pz = make_ideal(fig1, fig1.principal_ideal(fig1.index_of("z")))
    gamma = zd.build_gamma(fig1)
    gamma0 = zd.build_gamma_I(fig1, trivial)

    def lab(xs):
        return sorted(fig1.labels[x] for x in xs)

    facts = []

    def fact(name, ok, detail=""):
        facts.append((name, bool(ok), detail))

    fact("fig1 is distributive", is_distributive(fig1))
    fact("fig1 meets: a^b=0 a^x=0 c^b=0 c^x=0 0^z=0",
         all(fig1.meet(fig1.index_of(p), fig1.index_of(q)) == fig1.bottom
             for p, q in [("a", "b"), ("a", "x"), ("c", "b"), ("c", "x"), ("0", "z")]))
    fact("fig1 meets: a^d=c z^d=y b^z=x",
         fig1.labels[fig1.meet(fig1.index_of("a"), fig1.index_of("d"))] == "c"
         and fig1.labels[fig1.meet(fig1.index_of("z"), fig1.index_of("d"))] == "y"
         and fig1.labels[fig1.meet(fig1.index_of("b"), fig1.index_of("z"))] == "x")
    fact("|V(classic graph)| = 5", gamma.n == 5, f"got {gamma.n}")
    fact("classic graph vertex set {0,a,b,c,x}",
         lab(gamma.vertex_elements) == ["0", "a", "b", "c", "x"])
    fact("classic graph has 8 edges", len(gamma.edges()) == 8,
         f"got {len(gamma.edges())}")
    fact("|V(graph rel. {0})| = 4", gamma0.n == 4, f"got {gamma0.n}")
    fact("graph rel. {0} is the 4-cycle a-b-c-x",
         len(gamma0.edges()) == 4 and zd.invariants(gamma0).girth == 4)
    fact("the two graphs are not isomorphic",
         zd.graphs_isomorphic(gamma, gamma0) is None)
    nonzero = [v for v in gamma.vertex_elements if v != fig1.bottom]
    fact("graph rel. {0} isomorphic to classic graph minus 0",
         zd.graphs_isomorphic(gamma0, zd.induced_subgraph(gamma, nonzero)) is not None)
    inv_g = zd.invariants(gamma)
    fact("classic graph: girth 3, diameter 2, omega 3, chi 3",
         (inv_g.girth, inv_g.diameter, inv_g.clique_number, inv_g.chromatic_number)
         == (3, 2, 3, 3))
    inv_g0 = zd.invariants(gamma0)
    fact("graph rel. {0}: diameter 2, no cut vertices, core = whole graph, omega 2, chi 2",
         inv_g0.diameter == 2 and not inv_g0.cut_vertices
         and inv_g0.core_vertices == frozenset(gamma0.vertex_elements)
         and inv_g0.clique_number == 2 and inv_g0.chromatic_number == 2)
    primes = ideals_mod.enumerate_prime_ideals(fig1)
    expected_primes = sorted(
        [sorted("0ca"), sorted("0xb"), sorted("0caxyz"), sorted("0cxybd")]
    )
    fact("fig1 prime ideals exactly {(a],(b],(z],(d]}",
         sorted(lab(P.members) for P in primes) == expected_primes)
    fact("quotient ({0} : a) = {0,x,b}",
         lab(ideals_mod.quotient_ideal(fig1, trivial, fig1.index_of("a")))
         == ["0", "b", "x"])
    rad_in = ideals_mod.radical(fig1, pz, RadicalVariant.CONTAINED)
    fact("radical of (z], contained variant = {0,a,c} with 2 primes",
         rad_in.value is not None and lab(rad_in.value) == ["0", "a", "c"]
         and rad_in.family_size == 2)
    rad_out = ideals_mod.radical(fig1, pz, RadicalVariant.CONTAINING)
    fact("radical of (z], containing variant = (z] itself",
         rad_out.value == pz.members and rad_out.family_size == 1)
    fact("graph rel. (z] is empty", zd.build_gamma_I(fig1, pz).n == 0)
    fact("P1.3 holds on (fig1, {0})",
         claims_mod.run_claim("P1.3", fig1, trivial).status == HOLDS)
    fact("P1.3 vacuous on (fig1, (z])",
         claims_mod.run_claim("P1.3", fig1, pz).status == VACUOUS)
    for cid in ("L1.4", "T1.5a", "T1.5b", "CASE4", "GAMMA0"):
        fact(f"{cid} holds on (fig1, {{0}})",
             claims_mod.run_claim(cid, fig1, trivial).status == HOLDS)
    fact("P2.1 contained-variant fails on (fig1, (z])",
         claims_mod.run_claim("P2.1-CONTAINED", fig1, pz).status == FAILS)
    fact("P2.1 containing-variant holds on (fig1, (z])",
         claims_mod.run_claim("P2.1-CONTAINING", fig1, pz).status == HOLDS)
    fact("T2.3 holds on (fig1, (z])",
         claims_mod.run_claim("T2.3", fig1, pz).status == HOLDS)

    trunc = claims_mod.fixture_example_1_7(6)
    chain = claims_mod.example_1_7_chain_ideal(trunc)
    fact("truncation fixture (n=6) has 8 elements", trunc.n == 8)
    fact("truncation fixture is not distributive",
         not is_distributive(trunc) and find_forbidden_sublattice(trunc) is not None)
    hyp = frozenset(trunc.elements())
    for a in chain.members:
        hyp &= trunc.upper_set(a)
    fact("truncation hypothesis intersection is {{4-6}, top}",
         sorted(trunc.labels[x] for x in hyp) == sorted(["{4-6}", "{1-6}"]))
    fact("P1.6 vacuous on the truncation instance",
         claims_mod.run_claim("P1.6", trunc, chain).status == VACUOUS)

    found = census_mod.search_counterexample("P2.1-CONTAINED", 3)
    ok = False
    detail = "no counterexample found"
    if found is not None:
        L3, I3, _ = found
        ok = L3.n == 3 and len(I3.members) == 2
        detail = f"size {L3.n}, ideal {I3.label_str(L3)}"
    fact("3-chain refutes P2.1 (contained variant)", ok, detail)
    return facts


def cmd_verify_paper(args) -> int:
    facts = _fig1_golden_facts()
    failures = 0
    for name, ok, detail in facts:
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            suffix = f": {detail}" if detail else ""
            print(f"FAIL {name}{suffix}")
    print(f"{len(facts) - failures}/{len(facts)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_REFUTED


def cmd_census(args) -> int:
    config = census_mod.CensusConfig(
        max_size=args.max_size,
        distributive_only=args.distributive_only,
        claims=tuple(args.claims.split(",")) if args.claims else tuple(sorted(CLAIMS)),
        ideal_filter=args.ideal_filter,
        worker_count=args.workers,
    )
    if config.max_size > 8:
        raise LatticeError("census bound is 8 elements")
    if config.max_size == 8:
        print("warning: size 8 sweeps 222 classes and is slow", file=sys.stderr)
    summary = census_mod.run_census(config)
    sys.stdout.write(summary.render())
    if args.out:
        from .report import write_census_bundle

        for path in write_census_bundle(summary, Path(args.out)):
            print(f"wrote: {path}")
    return EXIT_REFUTED if summary.counterexamples else EXIT_OK


def cmd_search(args) -> int:
    found = census_mod.search_counterexample(args.claim, args.max_size)
    if found is None:
        print(f"no counterexample for {args.claim} up to size {args.max_size}")
        return EXIT_OK
    L, I, report = found
    print(f"counterexample for {args.claim}:")
    print(f"ideal: {I.label_str(L)}")
    print(report.render())
    sys.stdout.write(L.serialize())
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"counterexample_{args.claim.replace('.', '_')}.lat"
        path.write_text(L.serialize())
        print(f"wrote: {path}")
    return EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latzd", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", parents=[], help="validate a lattice file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ideals", help="enumerate ideals of a lattice")
    p.add_argument("file")
    p.add_argument("--prime", action="store_true", help="prime ideals only")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("zdgraph", help="build a zero-divisor graph")
    p.add_argument("file")
    _add_ideal_flags(p)
    p.add_argument("--gamma-classic", action="store_true",
                   help="classic graph (meet = bottom) instead of the ideal-relative one")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of the report")
    p.add_argument("--figure", metavar="PATH", help="also render the graph to an image")
    p.set_defaults(func=cmd_zdgraph)

    p = sub.add_parser("radical", help="compute the radical of an ideal")
    p.add_argument("file")
    _add_ideal_flags(p)
    p.add_argument("--variant", choices=["contained", "containing"],
                   default="contained")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("verify-paper", help="run the built-in fixture suite")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("census", help="sweep claims over all small lattices")
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--distributive-only", action="store_true")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--ideal-filter", choices=census_mod.IDEAL_FILTERS,
                   default="PROPER")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="DIR",
                   help="write summary, CSV, figures and counterexample files here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="search for a counterexample to one claim")
    p.add_argument("claim", choices=sorted(CLAIMS))
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--out", metavar="DIR")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (LatticeError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
