import pytest

from semihyper.conformance import (
    CHECK_IDS,
    REGISTRY,
    builtin_corpus,
    run_corpus,
    run_suite,
)
from semihyper.core import InvalidStructureError, Semihyperring
from conftest import fz


def test_registry_is_complete_and_sorted():
    assert len(REGISTRY) == 31
    assert list(CHECK_IDS) == sorted(CHECK_IDS)
    assert len(set(CHECK_IDS)) == len(CHECK_IDS)


def test_fixture_suites_pass(TOP2, KQ5, KQ6, ZERO1):
    for S in (TOP2, KQ5, KQ6, ZERO1):
        report = run_suite(S)
        assert report.ok, report.render()
        assert tuple(r.check_id for r in report.results) == CHECK_IDS


def test_top2_hyperring_check_trivially_passes(TOP2):
    # both sides of the criterion are false here, so the biconditional holds
    report = run_suite(TOP2)
    assert report.result("hyperring_reversive_criterion").verdict == "PASS"


def test_skips_require_reasons(M3EX):
    report = run_suite(M3EX)
    skipped = [r for r in report.results if r.verdict == "SKIP"]
    assert skipped
    assert all(r.note in ("no unity", "non-commutative") for r in skipped)


def test_suite_refuses_invalid_structure(KQ6):
    add = [list(row) for row in KQ6.add]
    add[1][3] = fz(1)  # the spec's mutation example
    broken = Semihyperring(add, KQ6.mul, zero=0, unity=1, labels=KQ6.labels, name="KQ6*")
    with pytest.raises(InvalidStructureError) as info:
        run_suite(broken)
    first = info.value.report.first_failure()
    # golden first failure: commutativity at the mutated cell
    assert first.axiom == "add-commutativity"
    assert first.witness == (1, 3)


def test_m3_example_fails_topology_check_with_witness(M3EX):
    report = run_suite(M3EX)
    failing = {r.check_id for r in report.failures()}
    assert failing == {"spectrum_topology_axioms"}
    witness = report.result("spectrum_topology_axioms").witness
    assert witness and "intersection identity fails" in witness


def test_determinism(KQ6):
    a = run_suite(KQ6).render()
    b = run_suite(KQ6).render()
    assert a == b


def test_sampled_subset_checks(KQ6):
    report = run_suite(KQ6, subset_cap=2)
    sampled = {r.check_id for r in report.results if r.note == "sampled"}
    assert "hyperstrong_implies_hypersubtractive" in sampled
    assert "m_system_is_p_system" in sampled
    assert report.ok
    # deterministic under a fixed seed
    assert run_suite(KQ6, subset_cap=2).render() == report.render()


def test_run_corpus_empty():
    report = run_corpus([])
    assert report.ok
    assert all(sum(c.values()) == 0 for c in report.summary.values())


def test_run_corpus_fixtures(TOP2, KQ5, KQ6):
    report = run_corpus([TOP2, KQ5, KQ6])
    assert report.ok
    assert len(report.reports) == 3
    assert report.summary["ideal_sum_smallest"]["PASS"] == 3


def test_corpus_with_counterexample_is_not_ok(M3EX, KQ5):
    report = run_corpus([KQ5, M3EX])
    assert not report.ok
    assert report.summary["spectrum_topology_axioms"]["FAIL"] == 1


def test_builtin_corpus_composition():
    corpus = builtin_corpus()
    names = [S.name for S in corpus]
    assert names[0] == "ZERO1"
    assert len(names) == len(set(names))
    assert sum(1 for n in names if n.startswith("T3p")) == 29
    assert "Z12N1.5.7.11" in names
    assert sum(1 for n in names if n.startswith("C3_")) == 88
    assert all(S.is_valid for S in corpus)


def test_json_shape(KQ6):
    doc = run_suite(KQ6).to_json_dict()
    assert set(doc) == {"structure", "checks"}
    assert doc["structure"] == "KQ6"
    for entry in doc["checks"]:
        assert set(entry) <= {"id", "verdict", "witness", "note"}
        assert entry["verdict"] in ("PASS", "FAIL", "SKIP")


def test_json_golden_is_byte_stable(KQ5):
    import json
    import os

    golden = os.path.join(os.path.dirname(__file__), "fixtures",
                          "kq5_conformance.json")
    with open(golden, encoding="utf-8") as fh:
        expected = fh.read()
    doc = run_suite(KQ5).to_json_dict()
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == expected


def test_direct_product_passes_suite(KQ5, TOP2):
    from semihyper.construct import direct_product

    report = run_suite(direct_product(KQ5, TOP2))
    assert report.ok, report.render()
