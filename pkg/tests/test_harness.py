import json

import pytest

from dyckdiv import harness
from dyckdiv.errors import InvalidArgument
from dyckdiv.exactnum import make_lambda
from dyckdiv.harness import LanguageSpec, Predicate, lang_member

TWO = make_lambda(2)
THREE_HALVES = make_lambda(3, 2)


@pytest.mark.parametrize(
    "spec,w,expected",
    [
        ("AB_STAR", "abab", True),
        ("A_K_B_K&AB_STAR", "aabb", False),
        ("A_K_B_K&AB_STAR", "ab", True),
        ("AB_STAR", "", True),
        ("A_K_B_K", "", False),
        ("SINGLETON_AB", "ab", True),
        ("IRREDUCIBLE_DYCK", "aabb", True),
        ("IRREDUCIBLE_DYCK", "abab", False),
        ("CT_POSITIVE", "aabb", True),
        ("CT_POSITIVE", "abab", False),
        ("OMEGA_ODD", "abaabbab", True),
        ("SYMMETRIC_DYCK", "aabbab", False),
        ("CT_POSITIVE", "ba", False),
        ("AB_STAR", "abx", False),
    ],
)
def test_lang_member(spec, w, expected):
    assert lang_member(LanguageSpec.parse(spec), w) is expected


def test_language_spec_limits():
    with pytest.raises(InvalidArgument):
        LanguageSpec.parse("AB_STAR&A_K_B_K&OMEGA_ODD")
    with pytest.raises(InvalidArgument):
        LanguageSpec.parse("NOPE")
    assert str(LanguageSpec.parse("a_k_b_k & ab_star")) == "A_K_B_K&AB_STAR"


def test_lemma_suite_small_range():
    r = harness.check_lemma_suite(TWO, 1, 1000)
    assert r.status == "PASS"
    assert r.checked == 1000
    assert r.counterexamples == []


def test_lemma_suite_hand_cases():
    assert harness.check_lemma_suite(THREE_HALVES, 6, 6).passed
    assert harness.check_lemma_suite(TWO, 15, 15).passed


def test_hoft_examples():
    assert harness.verify_hoft(TWO, 1, 3000).passed
    assert harness.verify_hoft(THREE_HALVES, 1, 3000).passed
    r = harness.verify_hoft(TWO, 5, 5)
    assert r.passed and r.checked == 1


def test_pow2_examples():
    for fn in (harness.verify_pow2_trapezoid, harness.verify_pow2_dense):
        r = fn(1, 5000)
        assert r.passed
        assert r.members == [2**k for k in range(13)]
        assert fn(6, 6).members == []
        assert fn(8, 8).members == [8]
    assert harness.verify_pow2_dense(5, 5).members == []


@pytest.mark.parametrize(
    "pred,spec",
    [("POWER_OF_TWO", "SINGLETON_AB"), ("NOT_PYTH", "AB_STAR"), ("NOT_TRAPEZOIDAL", "A_K_B_K")],
)
def test_characterizations_at_two(pred, spec):
    r = harness.check_characterization(pred, spec, TWO, 3000)
    assert r.passed, r.summary()


@pytest.mark.parametrize(
    "pred,spec",
    [("MIDDLE_POSITIVE", "CT_POSITIVE"), ("BLOCKS_ODD", "OMEGA_ODD"), ("DENSELY_DIVISIBLE", "IRREDUCIBLE_DYCK")],
)
def test_characterizations_any_lambda(pred, spec, lam):
    assert harness.check_characterization(pred, spec, lam, 1500).passed


def test_characterization_failure_is_data_and_capped():
    # powers of two encode as "ab" only at scale 2; at scale 3 the characterization breaks
    r = harness.check_characterization("POWER_OF_TWO", "SINGLETON_AB", make_lambda(3), 200, max_counterexamples=3)
    assert r.status == "FAIL"
    assert len(r.counterexamples) == 3
    assert r.failures > 3
    ns = [c.n for c in r.counterexamples]
    assert ns == sorted(ns)


def test_unknown_predicate():
    with pytest.raises(InvalidArgument):
        harness.check_characterization("PRIME", "AB_STAR", TWO, 10)


def test_power_of_two_fibre_is_exactly_powers():
    r = harness.check_characterization(Predicate.POWER_OF_TWO, LanguageSpec.parse("SINGLETON_AB"), TWO, 4096)
    assert r.passed
    from dyckdiv.encoder import encode

    assert [n for n in range(1, 4097) if encode(n, TWO) == "ab"] == [2**k for k in range(13)]


def test_language_equalities():
    assert harness.check_language_equality("CT_POSITIVE", "OMEGA_ODD", 20, True).passed
    assert harness.check_language_equality("A_K_B_K&AB_STAR", "SINGLETON_AB", 20, False).passed
    assert harness.check_language_equality("IRREDUCIBLE_DYCK&AB_STAR", "SINGLETON_AB", 20, False).passed


def test_symmetry_is_necessary():
    r = harness.check_language_equality("CT_POSITIVE", "OMEGA_ODD", 8, False)
    assert r.status == "FAIL"
    witness = r.counterexamples[0].word
    assert len(witness) <= 8
    from dyckdiv import dyckcore

    assert not dyckcore.is_symmetric_dyck(witness)
    assert (dyckcore.ct_pairs(witness) > 0) != (dyckcore.omega(witness) % 2 == 1)


def test_language_enumeration_bound():
    with pytest.raises(InvalidArgument):
        harness.check_language_equality("AB_STAR", "AB_STAR", 26, False)


def test_bad_range():
    with pytest.raises(InvalidArgument):
        harness.verify_hoft(TWO, 5, 4)
    with pytest.raises(InvalidArgument):
        harness.verify_hoft(TWO, 0, 4)


def test_report_json_without_timing_is_deterministic():
    a = harness.verify_hoft(THREE_HALVES, 1, 4000, jobs=1).to_json()
    b = harness.verify_hoft(THREE_HALVES, 1, 4000, jobs=3).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert "elapsed_ms" not in a
    assert "elapsed_ms" in harness.verify_hoft(THREE_HALVES, 1, 10).to_json(timing=True)


def test_failing_report_deterministic_across_jobs():
    kw = dict(max_counterexamples=5)
    a = harness.check_characterization("POWER_OF_TWO", "SINGLETON_AB", make_lambda(3), 500, jobs=1, **kw)
    b = harness.check_characterization("POWER_OF_TWO", "SINGLETON_AB", make_lambda(3), 500, jobs=4, **kw)
    assert a.to_json() == b.to_json()


def test_run_bundles():
    reports = harness.run_characterizations(THREE_HALVES, 500)
    assert len(reports) == 6 and all(r.passed for r in reports)
    langs = harness.run_language_checks(12)
    assert [r.as_expected for r in langs] == [True] * 4
    assert langs[-1].status == "FAIL"
