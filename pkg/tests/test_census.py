import json

import pytest

from threej_zeros.census import (
    CensusConfig,
    CensusReport,
    bowick_counts,
    enumerate_symbols,
    format_csv,
    format_jsonl,
    format_table,
    run_census,
    verify_bryant_jahn,
)
from threej_zeros.errors import OutOfRange
from threej_zeros.exact import HalfInt
from threej_zeros.threej import (
    ReggeSquare,
    ThreeJ,
    canonical_form,
    regge_value,
    selection_check,
    to_regge,
)
from threej_zeros.zeros import NON_ZERO, POLYNOMIAL_ZERO, TRIVIAL_ZERO, ZeroRecord, classify


def brute_symbols(j_max_twice):
    """All physical symbols with a + b + c <= j_max by a direct scan over doubled values."""
    out = set()
    for ta in range(j_max_twice + 1):
        for tb in range(j_max_twice + 1 - ta):
            for tc in range(j_max_twice + 1 - ta - tb):
                if (ta + tb + tc) % 2 or (ta + tb + tc) // 2 > j_max_twice // 2:
                    continue
                for al in range(-ta, ta + 1, 2):
                    for be in range(-tb, tb + 1, 2):
                        s = ThreeJ(ta, tb, tc, al, be, -al - be)
                        r = selection_check(s)
                        if r.triangle_ok and r.projections_in_range:
                            out.add(s)
    return out


class TestEnumerate:
    def test_zero(self):
        assert list(enumerate_symbols(0)) == [ThreeJ(0, 0, 0, 0, 0, 0)]

    @pytest.mark.parametrize("j", [1, 2, 3, 4])
    def test_matches_direct_scan(self, j):
        got = list(enumerate_symbols(j))
        assert len(got) == len(set(got))
        assert set(got) == brute_symbols(2 * j)

    def test_half_integer_example(self):
        syms = set(enumerate_symbols(1))
        assert ThreeJ.of("1/2", "1/2", 0, "1/2", "-1/2", 0) in syms
        assert ThreeJ.of(0, "1/2", "1/2", 0, "1/2", "-1/2") in syms

    def test_integer_only(self):
        assert all(s.two_a % 2 == 0 and s.two_b % 2 == 0 for s in enumerate_symbols(4, include_half_integer=False))

    def test_monotone(self):
        counts = [sum(1 for _ in enumerate_symbols(j)) for j in range(7)]
        assert all(a < b for a, b in zip(counts, counts[1:]))
        # half-integer j_max rounds down because J is an integer
        assert sum(1 for _ in enumerate_symbols("7/2")) == counts[3]


class TestRunCensus:
    def test_j5_empty(self):
        rep = run_census(CensusConfig(5))
        assert rep.records == [] and rep.counts[POLYNOMIAL_ZERO] == 0

    def test_j8_contains_weight1_zero(self):
        rep = run_census(CensusConfig(8))
        target = canonical_form(to_regge(ThreeJ.of("7/2", 3, "3/2", "3/2", -1, "-1/2")))[0]
        assert target in [r.square for r in rep.records]

    @pytest.mark.parametrize("j", [6, 9])
    def test_counts_match_per_symbol_classification(self, j):
        rep = run_census(CensusConfig(j))
        by_kind = {NON_ZERO: 0, TRIVIAL_ZERO: 0, POLYNOMIAL_ZERO: 0}
        canon = set()
        for s in enumerate_symbols(j):
            c = classify(s)
            by_kind[c.kind] += 1
            if c.kind == POLYNOMIAL_ZERO:
                canon.add(canonical_form(to_regge(s))[0])
        assert rep.counts == by_kind
        assert rep.total == sum(by_kind.values())
        assert {r.square for r in rep.records} == canon

    def test_records_verified_sorted_unique(self):
        rep = run_census(CensusConfig(20))
        squares = [r.square.entries for r in rep.records]
        assert squares == sorted(squares) and len(set(squares)) == len(squares)
        for r in rep.records:
            assert regge_value(r.square).is_zero()
            assert canonical_form(r.square)[0] == r.square
            assert classify(r.symbol).kind == POLYNOMIAL_ZERO

    def test_table_consistent(self):
        rep = run_census(CensusConfig(20))
        assert sum(sum(row.values()) for row in rep.table.values()) == len(rep.records)

    def test_filters(self):
        full = run_census(CensusConfig(20))
        d1 = run_census(CensusConfig(20, degree_filter=(1, 1)))
        assert d1.records == [r for r in full.records if r.degree == 1]
        o = run_census(CensusConfig(20, order_filter=(2, 9)))
        assert o.records == [r for r in full.records if 2 <= r.order <= 9]

    def test_jobs_deterministic(self):
        a = run_census(CensusConfig(16, jobs=1))
        b = run_census(CensusConfig(16, jobs=3))
        assert format_jsonl(a) == format_jsonl(b)
        assert format_csv(a) == format_csv(b)
        assert a.counts == b.counts

    def test_bad_config(self):
        with pytest.raises(OutOfRange):
            CensusConfig(-1)
        with pytest.raises(OutOfRange):
            CensusConfig(3, jobs=0)
        with pytest.raises(OutOfRange):
            CensusConfig(3, output_format="xml")
        assert CensusConfig("7/2").j_max == HalfInt(7)


class TestOutput:
    def test_jsonl_schema(self, tmp_path):
        path = tmp_path / "zeros.jsonl"
        rep = run_census(CensusConfig(12, output_path=str(path)))
        lines = path.read_text().splitlines()
        assert len(lines) == len(rep.records)
        for line, rec in zip(lines, rep.records):
            d = json.loads(line)
            assert list(d) == ["two_j", "two_m", "regge", "J", "degree", "order", "class", "generator"]
            assert d["regge"] == list(rec.square.entries) and d["class"] == "polynomial"
            s = ThreeJ(*d["two_j"], *d["two_m"])
            assert canonical_form(to_regge(s))[0] == rec.square

    def test_csv_and_table(self, tmp_path):
        rep = run_census(CensusConfig(9, output_path=str(tmp_path / "z.csv"), output_format="csv"))
        rows = (tmp_path / "z.csv").read_text().splitlines()
        assert rows[0] == "two_j,two_m,regge,J,degree,order,class,generator"
        assert len(rows) == len(rep.records) + 1
        assert "symbols scanned" in format_table(rep)


class TestBryantJahn:
    def test_empty(self):
        assert verify_bryant_jahn(CensusReport(CensusConfig(0)))

    def test_negative_control(self):
        rep = run_census(CensusConfig(9))
        assert verify_bryant_jahn(rep)
        fake = ZeroRecord(ReggeSquare.from_rows(((2, 2, 2),) * 3), 6, 2, 0, "fake")
        rep.records.append(fake)
        assert not verify_bryant_jahn(rep)

    def test_bowick_counts_shape(self):
        rep = run_census(CensusConfig(12))
        allz, reduced = bowick_counts(rep)
        assert reduced <= allz == len(rep.records)
