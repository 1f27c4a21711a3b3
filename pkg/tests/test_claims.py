import pytest

from latzd.claims import (
    CLAIMS,
    FAILS,
    HOLDS,
    VACUOUS,
    ClaimReport,
    check_CASE4,
    check_GAMMA0,
    check_L1_4,
    check_P1_3,
    check_P1_6,
    check_P2_1,
    check_T1_5,
    check_T2_3,
    example_1_7_chain_ideal,
    fixture_example_1_7,
    paper_fixtures,
    run_claim,
)
from latzd.ideals import RadicalVariant, enumerate_ideals, make_ideal
from latzd.lattice import is_distributive

from conftest import chain


@pytest.fixture
def trivial(fig1):
    return make_ideal(fig1, {fig1.bottom})


@pytest.fixture
def pz(fig1):
    return make_ideal(fig1, fig1.principal_ideal(fig1.index_of("z")))


def test_claim_report_requires_witness_on_fails():
    with pytest.raises(ValueError):
        ClaimReport("P1.3", FAILS)


def test_P1_3(fig1, trivial, pz):
    report = check_P1_3(fig1, trivial)
    assert report.status == HOLDS
    assert "diameter=2" in report.notes
    assert "girth=4" in report.notes
    assert check_P1_3(fig1, pz).status == VACUOUS  # empty graph
    L = chain(2)
    assert check_P1_3(L, make_ideal(L, {0})).status == VACUOUS  # <= 1 vertex


def test_L1_4_figure1(fig1, trivial):
    report = check_L1_4(fig1, trivial)
    assert report.status == HOLDS
    assert "cycle-branch" in report.notes


def test_L1_4_vacuous_without_path():
    L = chain(3)
    assert check_L1_4(L, make_ideal(L, {0})).status == VACUOUS


def test_L1_4_rejects_non_distributive():
    L = fixture_example_1_7(6)
    with pytest.raises(ValueError):
        check_L1_4(L, example_1_7_chain_ideal(L))


def test_T1_5(fig1, trivial):
    assert check_T1_5(fig1, trivial, part="a").status == HOLDS
    assert check_T1_5(fig1, trivial, part="b").status == HOLDS
    L = chain(3)
    assert check_T1_5(L, make_ideal(L, {0})).status == VACUOUS


def test_CASE4(fig1, trivial):
    assert check_CASE4(fig1, trivial).status == HOLDS
    L = chain(3)
    assert check_CASE4(L, make_ideal(L, {0})).status == VACUOUS


def test_P1_6_vacuous_for_trivial_ideal(fig1, trivial):
    report = check_P1_6(fig1, trivial)
    assert report.status == VACUOUS


def test_P1_6_example_1_7():
    # the corrigendum's objection: the hypothesis intersection is not {top}
    L = fixture_example_1_7(6)
    chain_ideal = example_1_7_chain_ideal(L)
    report = run_claim("P1.6", L, chain_ideal)
    assert report.status == VACUOUS


def test_P2_1(fig1, pz):
    fails = check_P2_1(fig1, pz, RadicalVariant.CONTAINED)
    assert fails.status == FAILS
    assert fails.witness["radical"] == "{0,c,a}"
    holds = check_P2_1(fig1, pz, RadicalVariant.CONTAINING)
    assert holds.status == HOLDS


def test_P2_1_three_chain():
    L = chain(3)
    I = make_ideal(L, {0, 1})
    report = check_P2_1(L, I, RadicalVariant.CONTAINED)
    assert report.status == FAILS
    assert report.witness["radical"] == "{0}"


def test_P2_1_vacuous_family(fig1, trivial):
    report = check_P2_1(fig1, trivial, RadicalVariant.CONTAINED)
    assert report.status == VACUOUS


def test_T2_3(fig1, pz):
    report = check_T2_3(fig1, pz)
    assert report.status == HOLDS
    assert any("(iii)-CONTAINING=yes" in n for n in report.notes)


def test_T2_3_two_chain():
    L = chain(2)
    report = check_T2_3(L, make_ideal(L, {0}))
    assert report.status == HOLDS


def test_GAMMA0(fig1):
    assert check_GAMMA0(fig1).status == HOLDS
    assert check_GAMMA0(chain(1)).status == VACUOUS


def test_GAMMA0_census(census6):
    for L in census6:
        report = check_GAMMA0(L)
        assert report.status in (HOLDS, VACUOUS)
        assert (report.status == VACUOUS) == (L.n < 2)


def test_run_claim_precondition_becomes_vacuous():
    L = fixture_example_1_7(6)
    report = run_claim("L1.4", L, example_1_7_chain_ideal(L))
    assert report.status == VACUOUS
    assert any("precondition" in n for n in report.notes)


def test_run_claim_unknown_id(fig1, trivial=None):
    with pytest.raises(KeyError):
        run_claim("NOPE", fig1, make_ideal(fig1, {fig1.bottom}))


def test_registry_covers_all_claim_ids():
    assert set(CLAIMS) == {
        "P1.3", "L1.4", "T1.5a", "T1.5b", "CASE4", "P1.6",
        "P2.1-CONTAINED", "P2.1-CONTAINING", "T2.3", "GAMMA0",
    }


def test_reports_deterministic(fig1, trivial):
    a = run_claim("P1.3", fig1, trivial)
    b = run_claim("P1.3", fig1, trivial)
    assert a == b
    assert a.render() == b.render()


def test_fails_witness_revalidates(fig1, pz):
    # re-running the violated condition on the witness alone reproduces it
    report = check_P2_1(fig1, pz, RadicalVariant.CONTAINED)
    assert report.status == FAILS
    from latzd.ideals import radical

    value = radical(fig1, pz, RadicalVariant.CONTAINED).value
    rendered = "{" + ",".join(fig1.labels[i] for i in sorted(value)) + "}"
    assert rendered == report.witness["radical"]
    assert value != pz.members


def test_paper_fixtures():
    fixtures = paper_fixtures()
    names = [f.name for f in fixtures]
    assert names == ["figure1", "example1.7-n6"]
    fig1 = fixtures[0]
    assert fig1.lattice.n == 9
    assert is_distributive(fig1.lattice)
    assert dict(fig1.distinguished_ideals)["(z]"].is_ideal
    trunc = fixtures[1]
    assert trunc.lattice.n == 8
    assert not is_distributive(trunc.lattice)


def test_fixture_example_1_7_structure():
    L = fixture_example_1_7(6)
    assert L.n == 8
    assert L.labels[L.bottom] == "∅"
    assert L.labels[L.top] == "{1-6}"
    i12 = L.index_of("{12}")
    i3 = L.index_of("{3}")
    i1 = L.index_of("{1}")
    assert L.meet(i12, i3) == L.bottom
    assert L.join(i1, i3) == L.top
    chain_ideal = example_1_7_chain_ideal(L)
    assert chain_ideal.is_ideal and chain_ideal.is_proper
    hyp = frozenset(L.elements())
    for a in chain_ideal.members:
        hyp &= L.upper_set(a)
    assert {L.labels[x] for x in hyp} == {"{4-6}", "{1-6}"}


def test_fixture_example_1_7_larger_truncation():
    L = fixture_example_1_7(8)
    assert L.n == 10
    assert not is_distributive(L)
    with pytest.raises(ValueError):
        fixture_example_1_7(5)


def test_sweep_distributive_claims_hold(census6):
    # exhaustive run: the structural claims never fail on small lattices
    for L in census6:
        for I in enumerate_ideals(L):
            if not I.is_proper:
                continue
            for cid in ("P1.3", "L1.4", "T1.5a", "T1.5b", "CASE4", "GAMMA0"):
                assert run_claim(cid, L, I).status != FAILS
