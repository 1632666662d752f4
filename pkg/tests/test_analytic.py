from fractions import Fraction

import pytest

from pqcat import (
    InequalityConstants,
    InequalityInstance,
    PrimePower,
    ThresholdSearchError,
    find_tau0,
    inequality_holds,
    inequality_sides,
    specialized_constants,
    sqrt_gap_lower_bound,
    tau1,
)


def exp60_floor_by_series() -> int:
    # independent oracle: e**60 via the exact rational Taylor series with a
    # geometric tail bound, tight enough to pin the integer part
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while k <= 120 or term >= Fraction(1, 10**8):
        total += term
        k += 1
        term = term * 60 / k
    upper = total + 2 * term  # tail ratio 60/(k+1) < 1/2, so tail < 2*term
    assert total.numerator // total.denominator == upper.numerator // upper.denominator
    return total.numerator // total.denominator


class TestInstance:
    def test_modulus_guard(self):
        with pytest.raises(ValueError):
            InequalityInstance(PrimePower(100003, 1))

    def test_boundary_modulus_allowed(self):
        InequalityInstance(PrimePower(99991, 1))

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            InequalityInstance(PrimePower(2, 2), precision=32)


class TestSides:
    def test_witnesses_natural_log(self):
        # with natural logarithms the right side still dominates at the
        # headline exponents; the observed crossovers sit near 2**1698 and
        # 2**1763 (see find_tau0 below)
        inst22 = InequalityInstance(PrimePower(2, 2))
        lhs, rhs = inequality_sides(inst22, 2**1518)
        assert lhs < rhs
        inst32 = InequalityInstance(PrimePower(3, 2))
        lhs, rhs = inequality_sides(inst32, 3**956)
        assert lhs < rhs

    def test_small_n_fails(self):
        for pp in (PrimePower(2, 2), PrimePower(3, 2)):
            inst = InequalityInstance(pp)
            lhs, rhs = inequality_sides(inst, 2**100)
            assert lhs < rhs

    def test_decimal_log_mode_recovers_1518(self):
        # under base-10 logarithms the general form crosses exactly between
        # 2**1517 and 2**1518 for (2,2): the witness exponents were produced
        # with decimal logs
        constants = InequalityConstants(natural_log=False)
        inst = InequalityInstance(PrimePower(2, 2), constants=constants)
        assert not inequality_holds(inst, 2**1517)
        assert inequality_holds(inst, 2**1518)

    def test_decimal_log_specialized_recovers_956(self):
        constants = InequalityConstants(natural_log=False)
        inst = InequalityInstance(PrimePower(3, 2), constants=constants)
        assert inequality_holds(inst, 3**956, form="specialized")
        assert not inequality_holds(inst, 3**955, form="specialized")

    def test_precision_stability(self):
        for bits in (64, 128, 256, 512):
            inst = InequalityInstance(PrimePower(2, 2), precision=bits)
            assert not inequality_holds(inst, 2**1518)
            assert inequality_holds(inst, 2**1700)

    def test_returned_pair_preserves_verdict(self):
        inst = InequalityInstance(PrimePower(2, 2))
        for n in (2**100, 2**1700):
            lhs, rhs = inequality_sides(inst, n)
            assert (lhs > rhs) == inequality_holds(inst, n)

    def test_rejects_nonpositive_n(self):
        inst = InequalityInstance(PrimePower(2, 2))
        with pytest.raises(ValueError):
            inequality_sides(inst, 0)

    def test_specialized_needs_known_case(self):
        inst = InequalityInstance(PrimePower(5, 2))
        with pytest.raises(ValueError):
            inequality_sides(inst, 100, form="specialized")


class TestTau0:
    def test_crossover_2_2(self):
        inst = InequalityInstance(PrimePower(2, 2))
        e = find_tau0(inst)
        assert e == 1698  # natural-log general form
        assert not inequality_holds(inst, 2 ** (e - 1))
        assert inequality_holds(inst, 2**e)

    def test_crossover_3_2(self):
        inst = InequalityInstance(PrimePower(3, 2))
        e = find_tau0(inst)
        assert e == 1763
        assert not inequality_holds(inst, 2 ** (e - 1))
        assert inequality_holds(inst, 2**e)

    def test_precision_independent(self):
        lo = find_tau0(InequalityInstance(PrimePower(2, 2), precision=64))
        hi = find_tau0(InequalityInstance(PrimePower(2, 2), precision=512))
        assert lo == hi

    def test_decimal_log_mode_brackets_1518(self):
        constants = InequalityConstants(natural_log=False)
        inst = InequalityInstance(PrimePower(2, 2), constants=constants)
        assert find_tau0(inst) == 1518

    def test_exponent_cap(self):
        inst = InequalityInstance(PrimePower(2, 2))
        with pytest.raises(ThresholdSearchError):
            find_tau0(inst, max_exponent=64)


class TestTau1:
    def test_first_term_oracle(self):
        e60_floor = exp60_floor_by_series()
        # e**60 is irrational, so ceil((e**60 - 1)/d) = (floor(e**60) - 1)//d + 1
        assert tau1(PrimePower(3, 2), 0) == (e60_floor - 1) // 8 + 1
        assert tau1(PrimePower(2, 2), 0) == max((e60_floor - 1) // 3 + 1, 10**10)
        assert tau1(PrimePower(5, 2), 0) == max((e60_floor - 1) // 24 + 1, 5**10 * 5**10)

    def test_second_term_identity(self):
        # 5**10 p**(5q): for (3,2) this is 15**10
        assert 5**10 * 3**10 == 15**10

    def test_max_logic(self):
        pp = PrimePower(2, 2)
        base = tau1(pp, 0)
        assert tau1(pp, base + 1) == base + 1
        assert tau1(pp, 2**1518) == 2**1518

    def test_dominant_terms(self):
        # (2,2): (e**60-1)/3 ~ 3.8e25 beats 5**10 * 2**10 = 10**10
        assert tau1(PrimePower(2, 2), 0) > 10**10
        assert 5**10 * 2**10 == 10**10


class TestSpecializedConstants:
    def test_values(self):
        c22 = specialized_constants(PrimePower(2, 2))
        assert c22 == (Fraction(421311, 10000), Fraction(165566, 100000))
        c32 = specialized_constants(PrimePower(3, 2))
        assert c32 == (Fraction(2604, 100), Fraction(262417, 100000))

    def test_main_constant_consistency(self):
        # 21.683 * 2**(46/48) = 42.125... agrees with 42.1311 to four
        # significant figures; 21.683 * 3**(46/48) = 62.136... does NOT agree
        # with 26.04 (it equals 21.683 * 3**(1/6) instead)
        from mpmath import mp, mpf

        mp.prec = 120
        general = mpf(21683) / 1000
        derived22 = general * mpf(2) ** (mpf(46) / 48)
        assert abs(derived22 - mpf("42.1311")) / mpf("42.1311") < 5e-4  # 4 sig figs
        derived32 = general * mpf(3) ** (mpf(46) / 48)
        assert abs(derived32 - mpf("26.04")) / mpf("26.04") > 1  # off by > 2x
        alt32 = general * mpf(3) ** (mpf(1) / 6)
        assert abs(alt32 - mpf("26.04")) / mpf("26.04") < 1e-4

    def test_tail_constants_are_decimal_logs(self):
        # both equal (11/8) * 2q * log10(p) to all printed digits
        from mpmath import log, mp, mpf

        mp.prec = 120
        assert abs(mpf("5.5") * log(2) / log(10) - mpf("1.65566")) < 5e-6
        assert abs(mpf("5.5") * log(3) / log(10) - mpf("2.62417")) < 5e-6

    def test_unknown_case_rejected(self):
        with pytest.raises(ValueError):
            specialized_constants(PrimePower(5, 2))


class TestCrudeLowerBound:
    @pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (7, 2), (31, 2)])
    def test_below_lhs_on_grid(self, p, q):
        inst = InequalityInstance(PrimePower(p, q))
        for k in range(1, 25):
            n = 10**k
            bound = sqrt_gap_lower_bound(inst, n)
            lhs, _ = inequality_sides(inst, n)
            assert bound <= lhs

    def test_positive_coefficient_near_limit(self):
        inst = InequalityInstance(PrimePower(99991, 1))
        assert sqrt_gap_lower_bound(inst, 10**12) > 0
