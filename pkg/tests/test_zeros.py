import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threej_zeros.errors import NoUnitEntry, NotAZero
from threej_zeros.threej import ReggeSquare, ThreeJ, from_regge, iter_regge_squares, racah_value, regge_value, to_regge
from threej_zeros.zeros import (
    NON_ZERO,
    POLYNOMIAL_ZERO,
    TRIVIAL_ZERO,
    Weight1Params,
    Weight2Instance,
    ZeroRecord,
    brudno_family,
    classify,
    lindner_criterion,
    weight1_factor,
    weight1_from_params,
    weight1_regge,
    weight2_pell,
    weight2_parametric,
    weight2_Q,
    weight2_regge,
    weight2_search,
    weight2_variables,
)

ONES = ReggeSquare.from_rows(((1, 1, 1),) * 3)
W1 = ThreeJ.of("7/2", 3, "3/2", "3/2", -1, "-1/2")


class TestClassify:
    def test_examples(self):
        c = classify(ThreeJ.of(1, 1, 1, 0, 0, 0))
        assert c.kind == TRIVIAL_ZERO and c.reason == "odd-J-symmetry" and c.order == -1
        c = classify(ThreeJ.of(3, 3, 2, 2, -2, 0))
        assert (c.kind, c.degree) == (POLYNOMIAL_ZERO, 1)
        c = classify(ThreeJ.of(6, 5, 3, 0, -1, 1))
        assert (c.kind, c.degree, c.order) == (POLYNOMIAL_ZERO, 2, 1)
        assert classify(ThreeJ.of(1, 1, 0, 0, 0, 0)).kind == NON_ZERO

    def test_record_rejects_nonzero(self):
        with pytest.raises(NotAZero):
            ZeroRecord.from_square(to_regge(ThreeJ.of(1, 1, 0, 0, 0, 0)), "test")


class TestWeight1:
    def test_examples(self):
        assert weight1_regge(1, 1, 1, 1) == ONES
        r = weight1_regge(4, 2, 2, 1)
        assert r.rows == ((1, 2, 5), (2, 4, 2), (5, 2, 1))
        assert from_regge(r) == W1 and racah_value(W1).is_zero()
        with pytest.raises(NotAZero):
            weight1_regge(2, 3, 1, 1)
        assert weight1_from_params(Weight1Params(1, 1, 1, 1)) == ONES
        assert weight1_from_params(Weight1Params(2, 2, 1, 1)) == r

    def test_factor_examples(self):
        assert weight1_factor(weight1_regge(4, 2, 2, 1)) == Weight1Params(2, 2, 1, 1)
        assert weight1_factor(ONES) == Weight1Params(1, 1, 1, 1)

    def test_params_up_to_six(self):
        for p in itertools.product(range(1, 7), repeat=4):
            r = weight1_from_params(Weight1Params(*p))
            assert regge_value(r).is_zero()
            f = weight1_factor(r)
            assert weight1_from_params(f) == r

    def test_brudno(self):
        assert brudno_family(1, 1) == ThreeJ.of(3, 3, 2, 2, -2, 0)
        assert brudno_family(2, 1) == ThreeJ.of(3, 2, 2, 2, -1, -1)
        for which in (1, 2):
            for n in range(1, 21):
                assert racah_value(brudno_family(which, n)).is_zero()

    def test_lindner_examples(self):
        assert lindner_criterion(ONES)
        assert lindner_criterion(weight1_regge(4, 2, 2, 1))
        nz = to_regge(ThreeJ.of(1, 1, 1, 1, -1, 0))
        assert 1 in nz.entries and not regge_value(nz).is_zero() and not lindner_criterion(nz)
        with pytest.raises(NoUnitEntry):
            lindner_criterion(ReggeSquare.from_rows(((2, 2, 2),) * 3))

    def test_lindner_agrees_on_weight1(self):
        for J in range(1, 16):
            for e in iter_regge_squares(J):
                if min(e) == 1:
                    r = ReggeSquare(e)
                    assert lindner_criterion(r) == regge_value(r).is_zero()


class TestWeight2:
    def test_Q_example(self):
        assert weight2_Q(2, 2, 2, 2) == -48

    def test_regge(self):
        assert weight2_regge(2, 2, 2, 2).rows == ((2, 2, 2),) * 3
        r = weight2_regge(3, 2, 4, 6)
        assert r.J == 13 == 4 + 6 + 3
        assert weight2_variables(r) == (3, 2, 4, 6)

    @pytest.mark.parametrize("u,D,N", [((2, 2), 12, -8), ((2, 3), 24, -20), ((3, 2), 24, -60)])
    def test_pell_data(self, u, D, N):
        assert tuple(weight2_pell(Weight2Instance(*u))) == (D, N)

    @given(st.integers(2, 20), st.integers(2, 20))
    def test_parametric(self, u1, u2):
        for s in weight2_parametric(Weight2Instance(u1, u2)):
            assert s.check()

    def test_search(self):
        recs = weight2_search(Weight2Instance(2, 2), 60, 60)
        assert recs
        for r in recs:
            assert regge_value(r.square).is_zero()
            assert r.degree == min(r.square.entries) in (1, 2)

    def test_Q_zero_iff_3j_zero_in_box(self):
        for u1 in range(2, 7):
            for u2 in range(2, 7):
                for x1 in range(u2, 41):
                    for x2 in range(2, 41):
                        q = weight2_Q(u1, u2, x1, x2) == 0
                        z = regge_value(weight2_regge(u1, u2, x1, x2)).is_zero()
                        assert q == z, (u1, u2, x1, x2)
