"""Tests for conjecture checkers: coverage families, scans, representation searches, replay."""

from __future__ import annotations

from dataclasses import replace

import pytest

from anbn.conjectures import (
    CLAUSES,
    KNOWN_SOLUTIONS,
    CheckerOptions,
    ConjectureRecord,
    CoverageFamily,
    PowerTarget,
    RecordStatus,
    available_conjectures,
    coverage_conjecture,
    diophantine_scan_c12,
    get_checker,
    newman_analogue_least_n,
    perfect_power_scan,
    replay_record,
    representation_search,
    spot_check_minimality,
)
from anbn.conjectures import representation
from anbn.conjectures.base import combine_outcomes
from anbn.conjectures.coverage import family_sets, prime_bound, recount_cover
from anbn.conjectures.newman import least_n_per_residue
from anbn.conjectures.representation import (
    UNRESOLVED_N,
    pair_candidates,
    replay_clause,
    rescan_minimal,
    totient_exponent,
)
from anbn.conjectures.schemas import SearchOutcome, worst_status
from anbn.errors import PreconditionError, UnknownConjectureError
from anbn.sequences import SequenceKind, SequenceSpec

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _check_range(conjecture_id: str, start: int, stop: int, options: CheckerOptions):
    checker = get_checker(conjecture_id, options)
    return checker, [checker.check(n) for n in range(start, stop + 1)]


def _assert_all_verified_and_replay(checker, records):
    for record in records:
        assert record.status is RecordStatus.VERIFIED, (record.parameter, record.witness)
        verdict = checker.replay(record)
        assert verdict, (record.parameter, verdict.reason)


def _never_prime(*args, **kwargs) -> bool:
    return False


# ---------------------------------------------------------------------------
# Statuses
# ---------------------------------------------------------------------------


class TestStatuses:
    def test_worst_status_order(self):
        assert worst_status([]) is RecordStatus.VERIFIED
        assert worst_status([RecordStatus.VERIFIED, RecordStatus.EXHAUSTED_CAP]) is (
            RecordStatus.EXHAUSTED_CAP
        )
        assert worst_status([RecordStatus.INDETERMINATE, RecordStatus.EXHAUSTED_CAP]) is (
            RecordStatus.INDETERMINATE
        )
        assert worst_status([RecordStatus.COUNTEREXAMPLE, RecordStatus.INDETERMINATE]) is (
            RecordStatus.COUNTEREXAMPLE
        )

    def test_combine_outcomes(self):
        witness, status, rounds = combine_outcomes({
            "a": SearchOutcome({"k": 3}, RecordStatus.VERIFIED, prp_rounds=8),
            "b": SearchOutcome(None, RecordStatus.EXHAUSTED_CAP, note="no k <= 10"),
        })
        assert status is RecordStatus.EXHAUSTED_CAP
        assert rounds == 8
        assert witness["a"] == {"k": 3}
        assert witness["b"] == {"note": "no k <= 10"}
        assert witness["clause_status"] == {"a": "verified", "b": "exhausted_cap"}

    def test_record_dict_round_trip(self):
        record = ConjectureRecord("1.3i", 10, {"k": 1}, RecordStatus.VERIFIED, 1.23456, 0)
        restored = ConjectureRecord.from_dict(record.to_dict())
        assert restored.identity() == record.identity()

    def test_options_validated(self):
        with pytest.raises(PreconditionError):
            CheckerOptions(sign="sideways")
        with pytest.raises(PreconditionError):
            CheckerOptions(totient_reading="loose")
        with pytest.raises(PreconditionError):
            CheckerOptions(prp_rounds=0)


# ---------------------------------------------------------------------------
# Coverage families
# ---------------------------------------------------------------------------


class TestCoverageFamilies:
    def test_prime_bound(self):
        assert prime_bound(29) == 215
        assert prime_bound(4) == 11

    def test_exp_minus_n_mod_29(self):
        (report,) = coverage_conjecture(CoverageFamily.C1_1, 29, 29, a=2, sign="minus")
        assert report.first_cover_index == 195
        assert report.cap == 215

    def test_both_signs(self):
        reports = coverage_conjecture("C1.1", 7, 7, a=3, sign="both")
        assert [r.spec.b for r in reports] == [-1, 1]

    def test_prime_family_covers_small_moduli(self):
        reports = coverage_conjecture(CoverageFamily.C1_4I, 1, 30)
        assert len(reports) == 60
        assert all(r.covered for r in reports)

    def test_binomial_family_covers_small_moduli(self):
        reports = coverage_conjecture(CoverageFamily.C1_5I, 1, 20)
        assert len(reports) == 80
        assert all(r.covered for r in reports)

    def test_binomial_bounds(self):
        bounds = {spec.kind: bound for spec, bound in family_sets("C1.5i", 5)}
        assert bounds == {
            SequenceKind.CENTRAL_BINOM_PLUS_N: 15,
            SequenceKind.CENTRAL_BINOM_MINUS_N: 27,
            SequenceKind.CATALAN_MINUS_N: 19,
            SequenceKind.CATALAN_PLUS_N: 35,
        }

    def test_residue_system_family(self):
        sets = family_sets(CoverageFamily.T1_1, 10, a=3)
        assert [spec.b for spec, _ in sets] == [1, 3, 7, 9]
        assert all(bound == 100 for _, bound in sets)
        assert all(r.covered for r in coverage_conjecture("T1.1-empirical", 1, 12, a=3))

    def test_modulus_one_covers_immediately(self):
        for family in CoverageFamily:
            for report in coverage_conjecture(family, 1, 1):
                assert report.first_cover_index == 1

    def test_empty_range(self):
        with pytest.raises(PreconditionError):
            coverage_conjecture("C1.1", 5, 4)

    def test_recount_cover(self):
        spec = SequenceSpec.exp_linear(2, -1)
        assert recount_cover(spec, 29, 195)
        assert not recount_cover(spec, 29, 194)
        assert not recount_cover(spec, 29, 196)


class TestCoverageCheckers:
    def test_exp_minus_n_record(self, options):
        checker = get_checker("1.1", options)
        record = checker.check(29)
        assert record.status is RecordStatus.VERIFIED
        assert record.witness["family"] == "C1.1"
        assert record.witness["sets"][0]["first_cover_index"] == 195
        assert checker.replay(record)

    def test_tampered_index_fails_replay(self, options):
        checker = get_checker("1.1", options)
        record = checker.check(29)
        record.witness["sets"][0]["first_cover_index"] = 194
        assert not checker.replay(record)

    def test_prime_checker_range(self, options):
        checker, records = _check_range("1.4i", 1, 15, options)
        _assert_all_verified_and_replay(checker, records)

    def test_binomial_checker_range(self, options):
        checker, records = _check_range("1.5i", 1, 10, options)
        _assert_all_verified_and_replay(checker, records)

    def test_residue_system_checker(self, options):
        checker, records = _check_range("T1.1", 1, 10, replace(options, a=5))
        _assert_all_verified_and_replay(checker, records)

    def test_replay_rejects_other_options(self, options):
        record = get_checker("1.1", options).check(11)
        other = get_checker("1.1", replace(options, a=3))
        assert not other.replay(record)


# ---------------------------------------------------------------------------
# x^n ± n = y^m
# ---------------------------------------------------------------------------


class TestDiophantine:
    def test_small_scan(self):
        found = {s.as_tuple() for s in diophantine_scan_c12(10, 10, 10**10)}
        assert found == KNOWN_SOLUTIONS

    def test_full_scan_finds_exactly_the_known_solutions(self):
        solutions = diophantine_scan_c12(100, 20, 10**30)
        assert sorted(s.as_tuple() for s in solutions) == sorted(KNOWN_SOLUTIONS)
        for s in solutions:
            assert s.x**s.n + s.offset == s.y**s.m

    def test_bad_bounds(self):
        with pytest.raises(PreconditionError):
            diophantine_scan_c12(1, 10, 100)

    def test_checker_per_base(self, options):
        checker = get_checker("1.2", options)
        five = checker.check(5)
        assert five.status is RecordStatus.VERIFIED
        assert len(five.witness["solutions"]) == 2
        assert checker.replay(five)

        three = checker.check(3)
        assert three.witness["solutions"] == []
        assert checker.replay(three)

    def test_replay_rejects_dropped_solution(self, options):
        checker = get_checker("1.2", options)
        record = checker.check(2)
        record.witness["solutions"] = record.witness["solutions"][:1]
        assert not checker.replay(record)


# ---------------------------------------------------------------------------
# Perfect-power scans
# ---------------------------------------------------------------------------


class TestPerfectPowers:
    def test_prime_product_exception(self):
        hits = perfect_power_scan(PowerTarget.N_TIMES_PRIME_PLUS_1, 1, 100)
        assert [(n, w.base, w.exponent) for n, w in hits] == [(3, 2, 4)]

    def test_prime_product_to_ten_thousand(self):
        hits = perfect_power_scan("n-times-prime-plus-1", 1, 10_000)
        assert [n for n, _ in hits] == [3]

    def test_partition_values_never_powers(self):
        assert perfect_power_scan(PowerTarget.PARTITION_VALUES, 1, 2000) == []

    def test_bell_values_never_powers(self):
        assert perfect_power_scan(PowerTarget.BELL_VALUES, 1, 300) == []

    @pytest.mark.parametrize(
        "target,start",
        [
            (PowerTarget.CENTRAL_BINOM_PLUS_N, 3),
            (PowerTarget.CENTRAL_BINOM_MINUS_N, 3),
            (PowerTarget.CATALAN_PLUS_N, 4),
            (PowerTarget.CATALAN_MINUS_N, 4),
        ],
    )
    def test_binomial_shifts_from_claim_start(self, target, start):
        assert perfect_power_scan(target, start, 500) == []

    def test_boundary_hits_below_claim_start(self):
        binom = perfect_power_scan(PowerTarget.CENTRAL_BINOM_PLUS_N, 1, 2)
        assert [(n, w.base, w.exponent) for n, w in binom] == [(2, 2, 3)]
        cat = perfect_power_scan(PowerTarget.CATALAN_PLUS_N, 3, 3)
        assert [(n, w.base, w.exponent) for n, w in cat] == [(3, 2, 3)]

    def test_bad_range(self):
        with pytest.raises(PreconditionError):
            perfect_power_scan(PowerTarget.PARTITION_VALUES, 0, 10)

    def test_listed_exception_is_verified(self, options):
        checker = get_checker("1.4ii", options)
        record = checker.check(3)
        assert record.status is RecordStatus.VERIFIED
        assert record.witness["perfect_powers"] == {
            "n-times-prime-plus-1": {"base": 2, "exponent": 4}
        }
        assert checker.replay(record)

    def test_binomial_checker_range(self, options):
        checker, records = _check_range("1.5ii", 3, 60, options)
        _assert_all_verified_and_replay(checker, records)
        assert set(records[0].witness["perfect_powers"]) == {"binom-plus-n", "binom-minus-n"}
        assert len(records[-1].witness["perfect_powers"]) == 4

    def test_hidden_power_fails_replay(self, options):
        checker = get_checker("1.4ii", options)
        record = checker.check(3)
        record.witness["perfect_powers"]["n-times-prime-plus-1"] = None
        assert not checker.replay(record)


# ---------------------------------------------------------------------------
# Strict partition residues
# ---------------------------------------------------------------------------


class TestStrictPartitionResidues:
    def test_least_n_mod_42(self):
        assert newman_analogue_least_n(42, 31, 10_000) == 8400

    def test_small_cases(self):
        assert newman_analogue_least_n(1, 0, 1) == 1
        assert newman_analogue_least_n(2, 0, 10) == 3

    def test_cap_hit(self):
        assert newman_analogue_least_n(42, 31, 8399) is None

    def test_table_agrees_with_single_queries(self):
        least = least_n_per_residue(7, 200)
        for r, n in least.items():
            assert newman_analogue_least_n(7, r, 200) == n

    def test_checker_mod_42(self, options):
        record = get_checker("1.7i", options).check(42)
        assert record.witness["least_n"]["31"] == 8400

    def test_checker_small_modulus_replays(self, options):
        checker, records = _check_range("1.7i", 1, 12, options)
        _assert_all_verified_and_replay(checker, records)

    def test_missing_residue_is_exhausted_cap(self, options):
        checker = get_checker("1.7i", replace(options, newman_cap=5))
        record = checker.check(10)
        assert record.status is RecordStatus.EXHAUSTED_CAP
        assert record.witness["residues_missing"]

    def test_replay_rejects_late_witness(self, options):
        checker = get_checker("1.7i", options)
        record = checker.check(5)
        r, n = next(iter(record.witness["least_n"].items()))
        record.witness["least_n"][r] = n + 5
        assert not checker.replay(record)


# ---------------------------------------------------------------------------
# Representation searches
# ---------------------------------------------------------------------------


class TestRepresentationSearch:
    def test_clause_thresholds(self):
        assert {cid: spec.min_n for cid, spec in CLAUSES.items()} == {
            "1.3i-first": 2,
            "1.3i-second": 4,
            "1.3ii": 4,
            "1.6ii": 4,
            "1.6iii": 5,
            "1.7ii-plus": 2,
            "1.7ii-minus": 6,
            "1.7iii": 2,
            "1.8i-plus": 10,
            "1.8i-minus": 14,
            "1.8ii-plus": 26,
            "1.8ii-minus": 15,
        }

    def test_shifted_power_small(self, options):
        record = representation_search("1.3i-first", 2, options)
        assert record.status is RecordStatus.VERIFIED
        assert record.witness == {"k": 1}

    def test_power_partition_sum_at_threshold(self, options):
        record = representation_search("1.6iii", 5, options)
        assert record.witness == {"p": 2, "k": 1, "m": 1}

    def test_below_threshold_rejected(self, options):
        with pytest.raises(PreconditionError):
            representation_search("1.3ii", 3, options)
        with pytest.raises(PreconditionError):
            get_checker("1.8ii", options).check(14)

    def test_unresolved_instance_is_indeterminate(self, options):
        record = representation_search("1.3i-first", UNRESOLVED_N, options)
        assert record.status is RecordStatus.INDETERMINATE
        assert "exceeds" in record.witness["note"]

    def test_mixed_alternatives(self, options):
        record = representation_search("1.7iii", 10, options)
        assert record.status is RecordStatus.VERIFIED
        assert set(record.witness["clause_status"]) == {"1.7iii-squares", "1.7iii-sum"}

    def test_pair_candidates_order(self, options):
        triples = pair_candidates("1.3ii", 40, options)
        assert triples == sorted(triples)
        assert all(k <= m for _, k, m in triples)
        assert all(total <= 38 for total, _, _ in triples)

    def test_pair_candidates_unknown_clause(self, options):
        with pytest.raises(PreconditionError):
            pair_candidates("1.3i-first", 40, options)


class TestTotientExponent:
    def test_strict(self):
        assert totient_exponent(7, 9, 6) == 4
        assert totient_exponent(5, 5, 6) is None
        assert totient_exponent(3, 4, 6, "sum") is None

    def test_sum_reading_accepts_half_integers(self):
        assert totient_exponent(1, 5, 8, "strict") is None
        assert totient_exponent(1, 5, 8, "sum") == 1

    def test_search_counts_skipped_pairs(self, options):
        record = representation_search("1.8i-plus", 10, options)
        assert record.status is RecordStatus.VERIFIED
        assert record.witness["k"] + record.witness["m"] == 10
        assert record.witness["skipped"] >= 0

    @pytest.mark.parametrize("n,gap", [(15, "1.8ii-minus"), (29, "1.8ii-plus")])
    def test_strict_reading_gap_is_indeterminate(self, options, n, gap):
        record = get_checker("1.8ii", options).check(n)
        assert record.status is RecordStatus.INDETERMINATE
        assert record.witness["clause_status"][gap] == "indeterminate"
        assert "strict totient reading" in record.witness[gap]["note"]

    @pytest.mark.parametrize("n,gap,m", [(15, "1.8ii-minus", 14), (29, "1.8ii-plus", 28)])
    def test_sum_reading_closes_gap(self, options, n, gap, m):
        record = get_checker("1.8ii", replace(options, totient_reading="sum")).check(n)
        assert record.status is RecordStatus.VERIFIED
        assert record.witness[gap]["k"] == 1
        assert record.witness[gap]["m"] == m

    def test_untested_pairs_never_count_as_counterexample(self, options, monkeypatch):
        monkeypatch.setattr(representation, "is_probable_prime", _never_prime)
        record = representation_search("1.8i-plus", 10, options)
        assert record.status is RecordStatus.INDETERMINATE


class TestRepresentationCheckers:
    def test_shifted_power_prime_to_2000(self, options):
        checker, records = _check_range("1.3i", 2, 2000, options)
        _assert_all_verified_and_replay(checker, records)
        assert set(records[0].witness["clause_status"]) == {"1.3i-first"}
        assert set(records[-1].witness["clause_status"]) == {"1.3i-first", "1.3i-second"}

    def test_power_pair_sums(self, options):
        checker, records = _check_range("1.3ii", 4, 5000, options)
        _assert_all_verified_and_replay(checker, records)

    @pytest.mark.parametrize("conjecture_id,start", [("1.6ii", 4), ("1.6iii", 5)])
    def test_partition_pair_sums(self, options, conjecture_id, start):
        checker, records = _check_range(conjecture_id, start, 2000, options)
        _assert_all_verified_and_replay(checker, records)

    @pytest.mark.parametrize("conjecture_id", ["1.7ii", "1.7iii"])
    def test_strict_partition_primes(self, options, conjecture_id):
        checker, records = _check_range(conjecture_id, 2, 400, options)
        _assert_all_verified_and_replay(checker, records)


    def test_rescan_confirms_minimal_witnesses(self, options):
        checker, records = _check_range("1.3ii", 4, 400, options)
        for record in records[::25]:
            assert checker.rescan(record)

    def test_rescan_rejects_later_witness(self, options):
        witness = representation_search("1.3i-first", 50, options).witness
        later = {"k": witness["k"] + 1}
        earlier_works = rescan_minimal("1.3i-first", 50, later, options)
        assert not earlier_works

    def test_replay_rejects_wrong_sum(self, options):
        witness = representation_search("1.3ii", 100, options).witness
        bad = dict(witness, p=witness["p"] + 2)
        assert not replay_clause("1.3ii", 100, bad, options)

    def test_exhausted_when_no_prime_below_cap(self, options, monkeypatch):
        monkeypatch.setattr(representation, "is_probable_prime", _never_prime)
        record = representation_search("1.3i-first", 50, replace(options, desk_max_k=10))
        assert record.status is RecordStatus.EXHAUSTED_CAP

    def test_counterexample_when_search_space_exhausted(self, options, monkeypatch):
        monkeypatch.setattr(representation, "is_probable_prime", _never_prime)
        record = representation_search("1.3i-first", 50, options)
        assert record.status is RecordStatus.COUNTEREXAMPLE

    def test_pair_counterexample(self, options, monkeypatch):
        monkeypatch.setattr(representation, "_is_small_prime", _never_prime)
        record = get_checker("1.3ii", options).check(30)
        assert record.status is RecordStatus.COUNTEREXAMPLE
        assert record.witness["clause_status"] == {"1.3ii": "counterexample"}

    def test_power_pair_sums_to_hundred_thousand(self, options):
        checker, records = _check_range("1.3ii", 4, 100_000, options)
        assert all(r.status is RecordStatus.VERIFIED for r in records)

    def test_partition_pair_sums_to_ten_thousand(self, options):
        for conjecture_id, start in (("1.6ii", 4), ("1.6iii", 5)):
            _, records = _check_range(conjecture_id, start, 10_000, options)
            assert all(r.status is RecordStatus.VERIFIED for r in records)

    def test_strict_partition_primes_to_two_thousand(self, options):
        for conjecture_id in ("1.7ii", "1.7iii"):
            _, records = _check_range(conjecture_id, 2, 2000, options)
            assert all(r.status is RecordStatus.VERIFIED for r in records)

    @pytest.mark.parametrize("conjecture_id,start", [("1.8i", 10), ("1.8ii", 15)])
    def test_totient_power_primes_to_thousand(self, options, conjecture_id, start):
        checker, records = _check_range(conjecture_id, start, 1000, options)
        statuses = {r.status for r in records}
        assert statuses <= {RecordStatus.VERIFIED, RecordStatus.INDETERMINATE}
        for record in records:
            if record.status is RecordStatus.VERIFIED:
                assert checker.replay(record), record.parameter

        summed = get_checker(conjecture_id, replace(options, totient_reading="sum"))
        for record in records:
            if record.status is RecordStatus.INDETERMINATE:
                assert summed.check(record.parameter).status is RecordStatus.VERIFIED


# ---------------------------------------------------------------------------
# Factory and record replay
# ---------------------------------------------------------------------------


class TestConjectureFactory:
    def test_available(self):
        ids = available_conjectures()
        for expected in ("1.1", "1.2", "1.3i", "1.3ii", "1.4i", "1.4ii", "1.5i", "1.5ii",
                         "1.6i", "1.6ii", "1.6iii", "1.7i", "1.7ii", "1.7iii", "1.8i", "1.8ii",
                         "T1.1"):
            assert expected in ids

    def test_unknown(self):
        with pytest.raises(UnknownConjectureError, match="Unknown conjecture"):
            get_checker("9.9")

    def test_default_options_cached(self):
        assert get_checker("1.3i") is get_checker("1.3i")

    def test_explicit_options_not_cached(self, options):
        assert get_checker("1.3i", options) is not get_checker("1.3i", options)

    def test_default_ranges(self):
        assert get_checker("1.8i").default_range() == (10, 1000)
        assert get_checker("1.8ii").default_range() == (15, 1000)
        assert get_checker("1.3ii").default_range() == (4, 10_003)

    def test_rng_depends_only_on_instance(self, options):
        first = get_checker("1.3i", options).rng_for(77).random()
        second = get_checker("1.3i", options).rng_for(77).random()
        assert first == second


class TestReplayRecord:
    def test_verified_record(self, options):
        record = get_checker("1.3i", options).check(100)
        assert replay_record(record, options)

    def test_non_verified_record_is_rerun(self, options):
        capped = replace(options, newman_cap=5)
        record = get_checker("1.7i", capped).check(10)
        assert record.status is RecordStatus.EXHAUSTED_CAP
        assert replay_record(record, capped)
        verdict = replay_record(record, options)
        assert not verdict
        assert "re-run" in verdict.reason

    def test_malformed_witness_fails_without_raising(self, options):
        record = ConjectureRecord("1.3ii", 100, {"clause_status": {"1.3ii": "verified"}},
                                  RecordStatus.VERIFIED)
        verdict = replay_record(record, options)
        assert not verdict
        assert "KeyError" in verdict.reason

    def test_unknown_id_fails_without_raising(self, options):
        record = ConjectureRecord("0.0", 1, {}, RecordStatus.VERIFIED)
        assert not replay_record(record, options)

    def test_spot_check_sample(self, options):
        _, records = _check_range("1.6ii", 4, 200, options)
        results = spot_check_minimality(records, options, fraction=0.05, seed=1)
        assert len(results) == round(len(records) * 0.05)
        assert all(verdict for _, verdict in results)
