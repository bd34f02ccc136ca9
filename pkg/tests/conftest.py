import random
from fractions import Fraction

import numpy as np
import pytest

from primefourier import CycloNum, PrimeModulus, SignalFn


def float_dft(values, p):
    """Independent floating oracle: (1/p) * sum_x f(x) e^(-2*pi*i*x*xi/p)."""
    return np.fft.fft(np.asarray(values, dtype=complex)) / p


def random_cyclo(rng: random.Random, modulus: PrimeModulus, lo=-10, hi=10,
                 den_max=1) -> CycloNum:
    coeffs = []
    for _ in range(modulus.p - 1):
        den = rng.randint(1, den_max) if den_max > 1 else 1
        coeffs.append(Fraction(rng.randint(lo, hi), den))
    return CycloNum(modulus, coeffs)


def random_int_signal(rng: random.Random, modulus: PrimeModulus, lo=-9, hi=9) -> SignalFn:
    while True:
        values = [rng.randint(lo, hi) for _ in range(modulus.p)]
        if any(values):
            return SignalFn(modulus, values)


@pytest.fixture(scope="session")
def oracle_corpus():
    """100 seeded random integer signals with |values| <= 10^3 and p <= 97.

    Shared by the oracle-agreement, Plancherel, round-trip and convolution
    acceptance criteria.
    """
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
              53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    rng = random.Random(20240)
    corpus = []
    for i in range(100):
        # Cycle the primes so the largest ones are guaranteed to appear.
        p = primes[i % len(primes)] if i < len(primes) else rng.choice(primes)
        modulus = PrimeModulus(p)
        corpus.append(random_int_signal(rng, modulus, -1000, 1000))
    return corpus
