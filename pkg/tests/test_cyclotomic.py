import cmath
import math
import random
from fractions import Fraction

import pytest

from primefourier import (
    CycloNum,
    IntPolynomial,
    PrimeModulus,
    TheoremViolationError,
    galois_divisibility_check,
    galois_reduce,
    is_prime,
)
from primefourier.cyclotomic import _packed_convolution

from conftest import random_cyclo


class TestPrimeModulus:
    def test_accepts_primes(self):
        for p in (2, 3, 5, 7, 11, 97, 10007):
            assert PrimeModulus(p).p == p

    @pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 100, 10000])
    def test_rejects_composites_and_small(self, bad):
        with pytest.raises(ValueError):
            PrimeModulus(bad)

    def test_rejects_above_bound(self):
        with pytest.raises(ValueError):
            PrimeModulus(10009)  # next prime past the default bound
        assert PrimeModulus(10009, max_p=20000).p == 10009

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("PRIMEFOURIER_MAX_P", "5")
        with pytest.raises(ValueError):
            PrimeModulus(7)
        monkeypatch.setenv("PRIMEFOURIER_MAX_P", "20000")
        assert PrimeModulus(10009).p == 10009

    def test_is_prime_small(self):
        primes = [n for n in range(2, 60) if is_prime(n)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


class TestRootPower:
    def test_identity(self):
        p5 = PrimeModulus(5)
        assert CycloNum.root_power(p5, 0).coeffs == (1, 0, 0, 0)

    def test_exponent_reduction(self):
        p5 = PrimeModulus(5)
        assert CycloNum.root_power(p5, 7).coeffs == (0, 0, 1, 0)

    def test_top_power_folds(self):
        # w^2 = -1 - w in Q(w_3), forced by the minimal polynomial 1 + z + z^2.
        p3 = PrimeModulus(3)
        assert CycloNum.root_power(p3, 2).coeffs == (-1, -1)

    def test_negative_exponent(self):
        p7 = PrimeModulus(7)
        assert CycloNum.root_power(p7, -2) == CycloNum.root_power(p7, 5)


class TestRingOps:
    def test_additive_inverse(self):
        p5 = PrimeModulus(5)
        w = CycloNum.root_power(p5, 1)
        assert (w + (-w)).is_zero()

    def test_w_times_w4_is_one(self):
        p5 = PrimeModulus(5)
        w = CycloNum.root_power(p5, 1)
        assert w * CycloNum.root_power(p5, 4) == 1

    def test_expand_and_reduce(self):
        p3 = PrimeModulus(3)
        w = CycloNum.root_power(p3, 1)
        assert ((w + 1) * (w - 1)).coeffs == (-2, -1)

    def test_modulus_mismatch(self):
        a = CycloNum.root_power(PrimeModulus(3), 1)
        b = CycloNum.root_power(PrimeModulus(5), 1)
        with pytest.raises(ValueError):
            a + b
        with pytest.raises(ValueError):
            a * b

    def test_minimal_polynomial_sums_to_zero(self):
        for p in (2, 3, 5, 7, 11, 13):
            modulus = PrimeModulus(p)
            total = CycloNum.zero(modulus)
            for k in range(p):
                total = total + CycloNum.root_power(modulus, k)
            assert total.is_zero()

    def test_w_to_the_p_is_one(self):
        for p in (2, 3, 5, 7, 11):
            modulus = PrimeModulus(p)
            assert CycloNum.root_power(modulus, 1) ** p == 1

    def test_ring_axioms_random(self):
        rng = random.Random(101)
        for p in (3, 5, 7):
            modulus = PrimeModulus(p)
            for _ in range(30):
                a = random_cyclo(rng, modulus, den_max=3)
                b = random_cyclo(rng, modulus, den_max=3)
                c = random_cyclo(rng, modulus, den_max=3)
                assert a + b == b + a
                assert a * b == b * a
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c

    def test_canonical_equality_is_congruence(self):
        rng = random.Random(55)
        p7 = PrimeModulus(7)
        for _ in range(20):
            a = random_cyclo(rng, p7, den_max=4)
            assert (a + (-a)).is_zero()
            assert a - a == CycloNum.zero(p7)

    def test_coeffs_in_lowest_terms(self):
        p3 = PrimeModulus(3)
        a = CycloNum(p3, [Fraction(2, 4), Fraction(-6, 8)])
        assert a.coeffs == (Fraction(1, 2), Fraction(-3, 4))
        for c in a.coeffs:
            assert math.gcd(c.numerator, c.denominator) == 1
            assert c.denominator > 0

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            CycloNum(PrimeModulus(5), [1, 2, 3])


class TestZeroTest:
    def test_minimal_polynomial_value_is_zero(self):
        p5 = PrimeModulus(5)
        total = CycloNum.zero(p5)
        for k in range(5):
            total = total + CycloNum.root_power(p5, k)
        assert total.is_zero()

    def test_distinct_basis_elements(self):
        p5 = PrimeModulus(5)
        assert not (CycloNum.root_power(p5, 2) - 1).is_zero()

    def test_inverse_recovers_one(self):
        rng = random.Random(77)
        p7 = PrimeModulus(7)
        for _ in range(25):
            a = random_cyclo(rng, p7, den_max=3)
            if a.is_zero():
                continue
            assert (a * a.inverse() - 1).is_zero()


class TestInverse:
    def test_inverse_of_w(self):
        p5 = PrimeModulus(5)
        w = CycloNum.root_power(p5, 1)
        assert w.inverse() == CycloNum.root_power(p5, 4)

    def test_rational_scalar(self):
        p5 = PrimeModulus(5)
        two = CycloNum.from_rational(p5, 2)
        assert two.inverse() == Fraction(1, 2)

    def test_one_minus_w_p3(self):
        # Hand xgcd of (1 - z) against 1 + z + z^2: (1-w)^(-1) = (2+w)/3.
        p3 = PrimeModulus(3)
        a = 1 - CycloNum.root_power(p3, 1)
        inv = a.inverse()
        assert inv.coeffs == (Fraction(2, 3), Fraction(1, 3))
        assert a * inv == 1
        # Numeric cross-check against the complex embedding.
        assert abs(inv.embed() - 1 / (1 - cmath.exp(2j * cmath.pi / 3))) < 1e-12

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            CycloNum.zero(PrimeModulus(5)).inverse()

    def test_division_operator(self):
        rng = random.Random(3)
        p11 = PrimeModulus(11)
        a = random_cyclo(rng, p11)
        b = random_cyclo(rng, p11)
        if b.is_zero():
            b = b + 1
        assert (a / b) * b == a


class TestConjugation:
    def test_conj_of_w(self):
        for p in (3, 5, 7):
            modulus = PrimeModulus(p)
            w = CycloNum.root_power(modulus, 1)
            assert w.conj() == CycloNum.root_power(modulus, p - 1)

    def test_rationals_fixed(self):
        p5 = PrimeModulus(5)
        r = CycloNum.from_rational(p5, Fraction(7, 3))
        assert r.conj() == r

    def test_involution(self):
        rng = random.Random(9)
        for p in (3, 5, 11):
            modulus = PrimeModulus(p)
            for _ in range(10):
                a = random_cyclo(rng, modulus, den_max=3)
                assert a.conj().conj() == a

    def test_ring_homomorphism(self):
        rng = random.Random(10)
        p7 = PrimeModulus(7)
        for _ in range(15):
            a = random_cyclo(rng, p7)
            b = random_cyclo(rng, p7)
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()

    def test_conj_matches_complex_conjugate(self):
        rng = random.Random(11)
        p13 = PrimeModulus(13)
        a = random_cyclo(rng, p13)
        assert abs(a.conj().embed() - a.embed().conjugate()) < 1e-12


class TestEmbedding:
    def test_power_sum_is_minus_top_power(self):
        # 1 + w + ... + w^(p-2) = -w^(p-1), numerically at p=7.
        p7 = PrimeModulus(7)
        total = CycloNum.zero(p7)
        for k in range(6):
            total = total + CycloNum.root_power(p7, k)
        assert abs(total.embed() - (-cmath.exp(-2j * cmath.pi / 7))) < 1e-12

    def test_multiplicative_up_to_tolerance(self):
        # 1e-9 relative: the embedded products reach ~1e7 in magnitude, where
        # doubles cannot do better than ~1e-9 absolute.
        rng = random.Random(12)
        for p in (3, 7, 13, 31, 97):
            modulus = PrimeModulus(p)
            for _ in range(5):
                a = random_cyclo(rng, modulus, -1000, 1000)
                b = random_cyclo(rng, modulus, -1000, 1000)
                expected = a.embed() * b.embed()
                err = abs((a * b).embed() - expected)
                assert err < 1e-9 * max(1.0, abs(expected))

    def test_multiplicative_absolute_for_small_inputs(self):
        rng = random.Random(14)
        for p in (3, 7, 13):
            modulus = PrimeModulus(p)
            for _ in range(10):
                a = random_cyclo(rng, modulus, -9, 9)
                b = random_cyclo(rng, modulus, -9, 9)
                assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-9

    def test_additive(self):
        rng = random.Random(13)
        p11 = PrimeModulus(11)
        a = random_cyclo(rng, p11)
        b = random_cyclo(rng, p11)
        assert abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12


class TestTextForm:
    def test_canonical_layout(self):
        p5 = PrimeModulus(5)
        a = CycloNum(p5, [Fraction(-2, 3), 1, 0, Fraction(5)])
        assert str(a) == "-2/3 + 1*w + 0*w^2 + 5*w^3"

    def test_p2_scalar(self):
        assert str(CycloNum.from_rational(PrimeModulus(2), Fraction(1, 2))) == "1/2"


class TestPackedConvolution:
    def test_matches_schoolbook(self):
        rng = random.Random(21)
        for p in (5, 13, 31):
            for _ in range(10):
                a = tuple(rng.randint(-500, 500) for _ in range(p - 1))
                b = tuple(rng.randint(-500, 500) for _ in range(p - 1))
                acc = [0] * p
                for i, ca in enumerate(a):
                    for j, cb in enumerate(b):
                        acc[(i + j) % p] += ca * cb
                assert _packed_convolution(a, b, p) == acc

    def test_dense_path_agrees_with_sparse(self):
        rng = random.Random(22)
        p31 = PrimeModulus(31)
        a = random_cyclo(rng, p31, -50, 50)
        b = random_cyclo(rng, p31, -50, 50)
        dense = a * b  # triggers the packed path at this density
        acc = [0] * 31
        for i, ca in enumerate(a._num):
            for j, cb in enumerate(b._num):
                acc[(i + j) % 31] += ca * cb
        sparse = CycloNum._from_redundant(p31, acc, a._den * b._den)
        assert dense == sparse


class TestIntPolynomial:
    def test_drops_zero_terms(self):
        poly = IntPolynomial(2, {(1, 0): 3, (0, 1): 0})
        assert poly.terms == {(1, 0): 3}

    def test_rejects_bad_exponents(self):
        with pytest.raises(ValueError):
            IntPolynomial(2, {(1,): 1})
        with pytest.raises(ValueError):
            IntPolynomial(1, {(-1,): 1})

    def test_value_at_one(self):
        poly = IntPolynomial.univariate([1, 1, 1])
        assert poly.value_at_one() == 3


class TestGaloisReduce:
    def test_fold_single_variable(self):
        # z1^2 with z1 = z^3 gives z^6, which folds to z at p=5.
        p5 = PrimeModulus(5)
        poly = IntPolynomial(1, {(2,): 1})
        assert galois_reduce(poly, [3], p5) == IntPolynomial.univariate([0, 1])

    def test_fold_two_variables(self):
        p5 = PrimeModulus(5)
        poly = IntPolynomial(2, {(1, 1): 1})
        assert galois_reduce(poly, [2, 3], p5) == IntPolynomial.univariate([1])

    def test_already_reduced(self):
        p3 = PrimeModulus(3)
        poly = IntPolynomial.univariate([1, 1, 1])
        assert galois_reduce(poly, [1], p3) == poly

    def test_powers_validated(self):
        p5 = PrimeModulus(5)
        poly = IntPolynomial.univariate([0, 1])
        with pytest.raises(ValueError):
            galois_reduce(poly, [5], p5)
        with pytest.raises(ValueError):
            galois_reduce(poly, [0, 1], p5)

    def test_reduction_preserves_evaluations(self):
        rng = random.Random(31)
        for p in (3, 5, 7):
            modulus = PrimeModulus(p)
            for _ in range(10):
                nvars = rng.randint(1, 3)
                terms = {
                    tuple(rng.randint(0, 6) for _ in range(nvars)): rng.randint(-5, 5)
                    for _ in range(rng.randint(1, 5))
                }
                poly = IntPolynomial(nvars, terms)
                powers = [rng.randint(0, p - 1) for _ in range(nvars)]
                reduced = galois_reduce(poly, powers, modulus)
                assert reduced.value_at_one() == poly.value_at_one()
                roots = [CycloNum.root_power(modulus, k) for k in powers]
                w = [CycloNum.root_power(modulus, 1)]
                assert reduced.evaluate(w) == poly.evaluate(roots)


class TestGaloisDivisibility:
    def test_minimal_polynomial_case(self):
        # 1 + z + z^2 vanishes at w (p=3) and evaluates to 3 at z=1.
        report = galois_divisibility_check(
            IntPolynomial.univariate([1, 1, 1]), [1], PrimeModulus(3)
        )
        assert report.vanishes_at_roots
        assert report.value_at_one == 3
        assert report.divisible_by_p

    def test_zero_value_at_one(self):
        report = galois_divisibility_check(
            IntPolynomial.univariate([-1, 1]), [0], PrimeModulus(5)
        )
        assert report.vanishes_at_roots
        assert report.value_at_one == 0
        assert report.divisible_by_p

    def test_distinct_roots_do_not_vanish(self):
        report = galois_divisibility_check(
            IntPolynomial(2, {(1, 0): 1, (0, 1): -1}), [1, 2], PrimeModulus(5)
        )
        assert not report.vanishes_at_roots

    def test_never_vanishing_without_divisibility(self):
        # Random stress of the implication: vanishing at roots forces p | P(1,...,1).
        rng = random.Random(41)
        for _ in range(300):
            p = rng.choice([2, 3, 5, 7, 11, 13])
            modulus = PrimeModulus(p)
            nvars = rng.randint(1, 4)
            terms = {
                tuple(rng.randint(0, 20) for _ in range(nvars)): rng.randint(-9, 9)
                for _ in range(rng.randint(1, 6))
            }
            poly = IntPolynomial(nvars, terms)
            powers = [rng.randint(0, p - 1) for _ in range(nvars)]
            report = galois_divisibility_check(poly, powers, modulus)
            if report.vanishes_at_roots:
                assert report.divisible_by_p

    def test_engineered_vanishing_cases(self):
        # Multiples of the minimal polynomial composed with power substitutions.
        rng = random.Random(42)
        for p in (3, 5, 7):
            modulus = PrimeModulus(p)
            for _ in range(20):
                scale = rng.randint(1, 9)
                poly = IntPolynomial.univariate([scale] * p)
                k = rng.randint(1, p - 1)  # z^k runs over all p-th roots
                report = galois_divisibility_check(poly, [k], modulus)
                assert report.vanishes_at_roots
                assert report.value_at_one == scale * p
                assert report.divisible_by_p
