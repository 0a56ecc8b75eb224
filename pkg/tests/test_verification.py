import json

import pytest

from polarpart import Partition, verify_bijection, verify_identity
from polarpart import counting, verification
from polarpart.verification import (
    IDENTITIES,
    count_parts_in_residues,
    definitional_max_length,
    s_class_transport,
)

from oracle import all_partitions, d_distant


class TestReports:
    def test_paper_example_row(self):
        report = verify_identity("thm3", 15, d=3, r=1)
        row = report.rows[-1]
        assert (row.n, row.lhs, row.rhs, row.equal) == (15, 10, 10, True)

    def test_first_row(self):
        row = verify_identity("thm1", 1).rows[0]
        assert (row.n, row.lhs, row.rhs) == (1, 1, 1)

    def test_eq5(self):
        assert verify_identity("eq5", 30).all_equal

    def test_rows_cover_range(self):
        report = verify_identity("eq2", 12)
        assert [row.n for row in report.rows] == list(range(1, 13))
        assert (report.n_from, report.n_to) == (1, 12)

    def test_serialization_layout(self):
        report = verify_identity("cor1", 5)
        doc = json.loads(report.to_json())
        assert list(doc) == ["identity", "params", "range", "rows", "all_equal"]
        assert doc["params"] == {"d": 3, "r": 2}
        assert doc["range"] == {"from": 1, "to": 5}
        assert list(doc["rows"][0]) == ["n", "lhs", "rhs", "equal"]

    def test_deterministic(self):
        a = verify_identity("thm2", 20).to_json()
        b = verify_identity("thm2", 20).to_json()
        assert a == b

    def test_parallel_rows_identical(self):
        serial = verify_identity("eq10", 18).to_json()
        parallel = verify_identity("eq10", 18, jobs=2).to_json()
        assert serial == parallel

    def test_csv(self):
        text = verify_identity("thm1", 3).to_csv()
        assert text.splitlines() == ["n,lhs,rhs,equal", "1,1,1,true", "2,1,1,true", "3,1,1,true"]

    def test_table(self):
        text = verify_identity("thm1", 4).to_table()
        assert "all_equal: true" in text
        assert len(text.splitlines()) == 4 + 3


class TestParams:
    @pytest.mark.parametrize("identity", ["thm3", "cor2", "bressoud", "lemma_maxlen", "bijection_roundtrip"])
    def test_needs_d(self, identity):
        with pytest.raises(ValueError):
            verify_identity(identity, 5)

    def test_fixed_conflict(self):
        with pytest.raises(ValueError):
            verify_identity("thm2", 5, d=4)

    def test_unknown(self):
        with pytest.raises(ValueError):
            verify_identity("thm9", 5)

    def test_n_max(self):
        with pytest.raises(ValueError):
            verify_identity("thm1", 0)

    def test_every_identity_runs(self):
        for identity in IDENTITIES:
            d = None if identity in verification.FIXED_PARAMS else 3
            assert verify_identity(identity, 12, d=d).all_equal, identity


class TestSpecialization:
    def test_thm3_d2_is_thm1(self):
        a = verify_identity("thm3", 30, d=2).rows
        b = verify_identity("thm1", 30).rows
        assert [(x.n, x.lhs, x.rhs) for x in a] == [(x.n, x.lhs, x.rhs) for x in b]

    def test_cor2_r1_is_thm3(self):
        for d in (2, 3, 4):
            a = verify_identity("cor2", 30, d=d, r=1).rows
            b = verify_identity("thm3", 30, d=d).rows
            assert [(x.lhs, x.rhs) for x in a] == [(x.lhs, x.rhs) for x in b]

    def test_cor2_is_cor1(self):
        a = verify_identity("cor2", 30, d=3, r=2).rows
        b = verify_identity("cor1", 30).rows
        assert [(x.lhs, x.rhs) for x in a] == [(x.lhs, x.rhs) for x in b]

    def test_cross_oracle_closure(self):
        for n in range(41):
            for d in range(1, 6):
                brute = verification.enumerated_count(n, d)
                assert brute == counting.count_d_distant(n, d)
                if d >= 2:
                    assert brute == counting.rhs_theorem3(n, d)
                if d == 2:
                    assert brute == counting.rhs_durfee_d2(n)
                if d == 3:
                    assert brute == counting.rhs_durfee_d3(n)


class TestWitness:
    def test_broken_rhs_gets_witness_at_smallest_failure(self, monkeypatch):
        # the strict i*i < n bound drops the i = 1 term at n = 1
        def strict(n):
            return sum(counting.count_distinct_k(n - i * i, j)
                       for i in range(n + 1) if i * i < n for j in (i - 1, i))
        monkeypatch.setattr(counting, "rhs_durfee_d3", strict)
        report = verify_identity("eq5", 10)
        assert not report.all_equal
        first = report.first_failure()
        assert (first.n, first.lhs, first.rhs) == (1, 1, 0)
        # both enumerated sets agree, so no partition is counted by only one side
        assert first.witness is None

    def test_set_level_failure_gets_witness(self, monkeypatch):
        from polarpart.enumeration import s_class_partitions

        def without_pairs(n, d):
            return (p for p in s_class_partitions(n, d) if p.length != 2)
        monkeypatch.setattr(verification, "s_class_partitions", without_pairs)
        monkeypatch.setattr(counting, "count_s_class",
                            lambda n, d: sum(1 for _ in without_pairs(n, d)))
        report = verify_identity("eq2", 10)
        first = report.first_failure()
        assert (first.n, first.lhs, first.rhs) == (4, 2, 1)
        assert first.witness == "3,1"
        assert sum(row.witness is not None for row in report.rows) == 1

    def test_theorem_witness_via_set_difference(self, monkeypatch):
        monkeypatch.setattr(counting, "rhs_theorem3", lambda n, d, r=1: 0 if n == 6 else
                            verification.enumerated_count(n, d, r))
        monkeypatch.setattr(counting, "theorem3_terms", lambda n, d, r=1: [])
        report = verify_identity("thm2", 8)
        first = report.first_failure()
        assert first.n == 6
        assert first.witness == "6"   # image not among the (emptied) targets

    def test_bressoud_witness(self, monkeypatch):
        monkeypatch.setattr(verification, "bressoud_condition", lambda p, d: True)
        report = verify_identity("bressoud", 6, d=2)
        first = report.first_failure()
        assert first.n == 3 and first.witness == "2,1"

    def test_lemma_witness(self, monkeypatch):
        monkeypatch.setattr(counting, "max_length", lambda n, d: 0)
        first = verify_identity("lemma_maxlen", 5, d=2).first_failure()
        assert first.n == 1 and first.witness == "1"
        report = verify_identity("lemma_maxlen", 5, d=2)
        assert report.rows[0].witness == "1"


class TestBijectionReport:
    def test_clean(self):
        report = verify_bijection(2, 1, 25)
        assert report.all_equal
        assert report.identity == "bijection_roundtrip"
        assert [row.lhs for row in report.rows] == [len(d_distant(n, 2)) for n in range(1, 26)]

    def test_figure_pairs_in_domain(self):
        assert verify_bijection(3, 1, 29).all_equal
        assert verify_bijection(2, 1, 34).rows[-1].equal

    def test_empty_range(self):
        report = verify_bijection(2, 1, 0)
        assert report.rows == [] and report.all_equal

    def test_broken_map_reports_witness(self, monkeypatch):
        monkeypatch.setattr(verification, "forward_map", lambda p, d, r=1: p)
        report = verify_bijection(3, 1, 8)
        first = report.first_failure()
        assert first is not None and first.witness is not None


class TestHelpers:
    def test_definitional_max_length(self):
        assert definitional_max_length(4, 2) == 2
        assert definitional_max_length(0, 2) == 0
        for n in range(1, 25):
            for d in (1, 2, 3):
                assert definitional_max_length(n, d) == max(len(p) for p in d_distant(n, d))

    def test_residue_dp(self):
        for n in range(25):
            expected = sum(1 for p in all_partitions(n) if all(x % 5 in (1, 4) for x in p))
            assert count_parts_in_residues(n, 5, {1, 4}) == expected

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_s_class_transport_bijective(self, d):
        from polarpart import in_s_class
        for n in range(25):
            images = [s_class_transport(Partition(p), d) for p in d_distant(n, d)]
            assert len(set(images)) == len(images)
            assert all(in_s_class(m, d) and m.weight == n for m in images)
