import pytest

from latzd.census import (
    CensusConfig,
    enumerate_lattices,
    run_census,
    search_counterexample,
)
from latzd.claims import FAILS, run_claim
from latzd.ideals import make_ideal
from latzd.lattice import (
    build_lattice,
    invariant_profile,
    lattice_from_text,
    lattices_isomorphic,
    parse_lattice,
)

from oracles import brute_lattice_count


def test_counts_match_brute_force_oracle():
    from collections import Counter

    counts = Counter(L.n for L in enumerate_lattices(6))
    for n in range(1, 7):
        assert counts[n] == brute_lattice_count(n)
    assert dict(counts) == {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}


def test_count_size_seven():
    assert sum(1 for L in enumerate_lattices(7) if L.n == 7) == 53


def test_every_size_four_lattice_is_chain_or_diamond():
    diamond = lattice_from_text("elements: 0 p q 1\ncovers: 0<p, 0<q, p<1, q<1")
    chain4 = lattice_from_text("elements: 0 a b 1\ncovers: 0<a, a<b, b<1")
    for L in enumerate_lattices(4):
        if L.n != 4:
            continue
        assert (
            lattices_isomorphic(L, diamond) is not None
            or lattices_isomorphic(L, chain4) is not None
        )


def test_enumeration_duplicate_free():
    reps = [L for L in enumerate_lattices(6)]
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if a.n == b.n and invariant_profile(a) == invariant_profile(b):
                assert lattices_isomorphic(a, b) is None


def test_enumeration_deterministic():
    first = [L.serialize() for L in enumerate_lattices(5)]
    second = [L.serialize() for L in enumerate_lattices(5)]
    assert first == second


def test_enumerated_lattices_rebuild():
    for L in enumerate_lattices(5):
        assert build_lattice(parse_lattice(L.serialize())) == L


def test_config_validation():
    with pytest.raises(ValueError):
        CensusConfig(max_size=0)
    with pytest.raises(ValueError):
        CensusConfig(worker_count=0)
    with pytest.raises(ValueError):
        CensusConfig(ideal_filter="SOME")
    with pytest.raises(ValueError):
        CensusConfig(claims=("NOPE",))


def test_census_size_one():
    summary = run_census(CensusConfig(max_size=1))
    assert summary.lattice_counts == {1: 1}
    assert summary.instance_count == 0  # the only ideal is improper
    assert summary.counterexamples == []


def test_census_finds_p21_counterexample():
    config = CensusConfig(
        max_size=3, claims=("P2.1-CONTAINED",), distributive_only=True
    )
    summary = run_census(config)
    assert len(summary.counterexamples) >= 1
    ce = summary.counterexamples[0]
    assert ce.claim_id == "P2.1-CONTAINED"
    assert ce.report.status == FAILS


def test_census_per_claim_totals():
    config = CensusConfig(max_size=5)
    summary = run_census(config)
    for cid in config.claims:
        assert sum(summary.per_claim[cid].values()) == summary.instance_count


def test_census_structural_claims_never_fail():
    config = CensusConfig(
        max_size=6,
        claims=("P1.3", "T1.5a", "T1.5b", "CASE4"),
        distributive_only=True,
    )
    summary = run_census(config)
    for cid in config.claims:
        assert summary.per_claim[cid].get(FAILS, 0) == 0


def test_census_deterministic_across_workers():
    base = run_census(CensusConfig(max_size=5, worker_count=1))
    parallel = run_census(CensusConfig(max_size=5, worker_count=4))
    assert base.render() == parallel.render()
    assert base.rows == parallel.rows


def test_census_principal_filter():
    all_proper = run_census(CensusConfig(max_size=4, ideal_filter="PROPER"))
    principal = run_census(CensusConfig(max_size=4, ideal_filter="PRINCIPAL"))
    assert principal.instance_count <= all_proper.instance_count


def test_counterexamples_replay():
    summary = run_census(CensusConfig(max_size=4, claims=("P2.1-CONTAINED",)))
    for ce in summary.counterexamples:
        L = build_lattice(parse_lattice(ce.lattice_text))
        labels = ce.ideal_labels.strip("{}").split(",")
        I = make_ideal(L, {L.index_of(lab) for lab in labels})
        replay = run_claim(ce.claim_id, L, I)
        assert replay.status == FAILS


def test_search_p21_contained():
    found = search_counterexample("P2.1-CONTAINED", 3)
    assert found is not None
    L, I, report = found
    assert L.n == 3
    assert len(I.members) == 2
    assert report.status == FAILS


def test_search_p21_containing_none():
    assert search_counterexample("P2.1-CONTAINING", 6) is None


def test_search_gamma0_none():
    assert search_counterexample("GAMMA0", 5) is None


def test_search_unknown_claim():
    with pytest.raises(KeyError):
        search_counterexample("NOPE", 3)
