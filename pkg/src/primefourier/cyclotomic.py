"""Exact arithmetic in the cyclotomic field Q(w) for w = e^(2*pi*i/p), p prime.

Elements are written on the power basis {1, w, ..., w^(p-2)}, which is a basis
of Q(w) over the rationals because the minimal polynomial 1 + z + ... + z^(p-1)
of w has degree p - 1.  Coefficients are exact rationals held as one integer
numerator vector over a single positive denominator, reduced so that the
numerators and the denominator share no common factor.  This makes the
representation canonical: two elements are equal iff their stored vectors are
identical, so the zero test (and with it every "non-zero" claim downstream)
is sound and complete.

The module also provides sparse integer polynomials in several variables,
the folding substitution P(z^(k_1), ..., z^(k_n)) mod z^p - 1, and the
divisibility check built on it: an integer polynomial that vanishes at p-th
roots of unity has P(1, ..., 1) divisible by p.
"""

from __future__ import annotations

import cmath
import functools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import TheoremViolationError

DEFAULT_MAX_PRIME = 10007
MAX_PRIME_ENV = "PRIMEFOURIER_MAX_P"

# Above this many coefficient products, dense multiplication switches from the
# schoolbook loop to big-integer packing (see _packed_convolution).
_DENSE_MUL_THRESHOLD = 256


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for the small moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeModulus:
    """A validated prime p, the order of the ambient cyclic group Z/pZ.

    Construction rejects composites (trial division) and primes above a
    configured bound; the bound defaults to 10007 and can be overridden per
    call or through the PRIMEFOURIER_MAX_P environment variable.
    """

    __slots__ = ("p",)

    def __init__(self, p: int, max_p: int | None = None):
        if max_p is None:
            max_p = int(os.environ.get(MAX_PRIME_ENV, DEFAULT_MAX_PRIME))
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"modulus must be an integer, got {p!r}")
        if p < 2:
            raise ValueError(f"modulus must be at least 2, got {p}")
        if p > max_p:
            raise ValueError(f"modulus {p} exceeds the configured bound {max_p}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def residues(self) -> range:
        return range(self.p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeModulus) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("PrimeModulus", self.p))

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    # Canonical form: positive denominator, gcd(all numerators, den) == 1.
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = math.gcd(den, *num)
    if g > 1:
        den //= g
        num = [c // g for c in num]
    return tuple(num), den


@functools.lru_cache(maxsize=None)
def _root_power_num(p: int, k: int) -> tuple[int, ...]:
    # w^(p-1) = -(1 + w + ... + w^(p-2)); smaller powers are basis vectors.
    if k == p - 1:
        return (-1,) * (p - 1)
    return tuple(1 if i == k else 0 for i in range(p - 1))


def _packed_convolution(a: tuple[int, ...], b: tuple[int, ...], p: int) -> list[int]:
    """Cyclic (mod z^p - 1) product of two coefficient vectors of length p-1.

    Packs each vector into a single big integer with enough bit spacing that
    Python's integer multiplication performs the convolution; signed digits
    are recovered with a balanced remainder.  Exact for arbitrary magnitudes.
    """
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bits = ((p - 1) * ma * mb).bit_length() + 2
    base = 1 << bits
    half = 1 << (bits - 1)
    mask = base - 1
    pa = 0
    for c in reversed(a):
        pa = (pa << bits) + c
    pb = 0
    for c in reversed(b):
        pb = (pb << bits) + c
    prod = pa * pb
    acc = [0] * p
    for e in range(2 * p - 3):
        d = prod & mask
        if d >= half:
            d -= base
        prod = (prod - d) >> bits
        idx = e if e < p else e - p
        acc[idx] += d
    if prod:
        raise AssertionError("packed convolution left a nonzero carry")
    return acc


class CycloNum:
    """An exact element of Q(w), w a primitive p-th root of unity.

    Stored as an integer numerator vector on the power basis plus a positive
    denominator; the `coeffs` property exposes the rational coefficients in
    lowest terms.  Instances are immutable and safe to share.
    """

    __slots__ = ("modulus", "_num", "_den")

    def __init__(self, modulus: PrimeModulus, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != modulus.p - 1:
            raise ValueError(
                f"expected {modulus.p - 1} coefficients for p={modulus.p}, got {len(coeffs)}"
            )
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        num = [int(c * den) for c in coeffs]
        self.modulus = modulus
        self._num, self._den = _normalize(num, den)

    @classmethod
    def _raw(cls, modulus: PrimeModulus, num: tuple[int, ...], den: int) -> CycloNum:
        # Trusted constructor: (num, den) must already be canonical.
        self = object.__new__(cls)
        self.modulus = modulus
        self._num = num
        self._den = den
        return self

    @classmethod
    def _from_redundant(cls, modulus: PrimeModulus, acc: list[int], den: int) -> CycloNum:
        # acc has length p, on the redundant spanning set {1, w, ..., w^(p-1)};
        # fold the top coefficient through w^(p-1) = -(1 + ... + w^(p-2)).
        t = acc[-1]
        if t:
            num = [c - t for c in acc[:-1]]
        else:
            num = acc[:-1]
        return cls._raw(modulus, *_normalize(list(num), den))

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> CycloNum:
        return cls._raw(modulus, (0,) * (modulus.p - 1), 1)

    @classmethod
    def one(cls, modulus: PrimeModulus) -> CycloNum:
        return cls.root_power(modulus, 0)

    @classmethod
    def from_rational(cls, modulus: PrimeModulus, value) -> CycloNum:
        value = Fraction(value)
        num = [value.numerator] + [0] * (modulus.p - 2)
        return cls._raw(modulus, *_normalize(num, value.denominator))

    @classmethod
    def root_power(cls, modulus: PrimeModulus, k: int) -> CycloNum:
        """The canonical representation of w^k (exponent reduced mod p)."""
        return cls._raw(modulus, _root_power_num(modulus.p, k % modulus.p), 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Rational coefficients on {1, w, ..., w^(p-2)}, in lowest terms."""
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _sparse(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self._num) if c]

    def _check_same(self, other: CycloNum) -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus.p} vs {other.modulus.p}"
            )

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.modulus, other)
        return None

    def __add__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check_same(other)
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            den = d1
        else:
            g = math.gcd(d1, d2)
            m1, m2 = d2 // g, d1 // g
            num = [a * m1 + b * m2 for a, b in zip(self._num, other._num)]
            den = d1 // g * d2
        return CycloNum._raw(self.modulus, *_normalize(num, den))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum._raw(self.modulus, tuple(-c for c in self._num), self._den)

    def __sub__(self, other) -> CycloNum:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycloNum:
        return (-self) + other

    def _scaled(self, value: Fraction) -> CycloNum:
        num = [c * value.numerator for c in self._num]
        return CycloNum._raw(self.modulus, *_normalize(num, self._den * value.denominator))

    def _rotated(self, shift: int, factor: int, factor_den: int) -> CycloNum:
        # self * (factor/factor_den) * w^shift without a full convolution.
        p = self.modulus.p
        acc = [0] * p
        for i, c in enumerate(self._num):
            if c:
                j = i + shift
                acc[j - p if j >= p else j] += c * factor
        return CycloNum._from_redundant(self.modulus, acc, self._den * factor_den)

    def __mul__(self, other) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        self._check_same(other)
        a, b = self._sparse(), other._sparse()
        if not a or not b:
            return CycloNum.zero(self.modulus)
        if len(a) == 1:
            i, c = a[0]
            return other._rotated(i, c, self._den)
        if len(b) == 1:
            i, c = b[0]
            return self._rotated(i, c, other._den)
        p = self.modulus.p
        den = self._den * other._den
        if len(a) * len(b) > _DENSE_MUL_THRESHOLD:
            acc = _packed_convolution(self._num, other._num, p)
        else:
            acc = [0] * p
            for i, ca in a:
                for j, cb in b:
                    k = i + j
                    acc[k - p if k >= p else k] += ca * cb
        return CycloNum._from_redundant(self.modulus, acc, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return self._scaled(1 / Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNum.one(self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> CycloNum:
        """Multiplicative inverse via the extended Euclidean algorithm.

        Runs over Q[z] against the minimal polynomial 1 + z + ... + z^(p-1),
        which is irreducible for prime p, so the gcd is a nonzero constant.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        if self.is_rational():
            return CycloNum.from_rational(self.modulus, Fraction(self._den, self._num[0]))
        p = self.modulus.p
        a = [Fraction(c, self._den) for c in self._num]
        while a and not a[-1]:
            a.pop()
        minimal = [Fraction(1)] * p
        cofactor, constant = _invert_mod_polynomial(a, minimal)
        cofactor = [c / constant for c in cofactor]
        cofactor += [Fraction(0)] * (p - 1 - len(cofactor))
        return CycloNum(self.modulus, cofactor)

    def conj(self) -> CycloNum:
        """Image under w -> w^(p-1), i.e. complex conjugation; an involution."""
        p = self.modulus.p
        acc = [0] * p
        for i, c in enumerate(self._num):
            if c:
                acc[(p - i) % p] += c
        return CycloNum._from_redundant(self.modulus, acc, self._den)

    def embed(self) -> complex:
        """Double-precision value of the standard embedding w = e^(2*pi*i/p)."""
        p = self.modulus.p
        d = float(self._den)
        total = 0j
        for i, c in enumerate(self._num):
            if c:
                total += (c / d) * cmath.exp(2j * cmath.pi * i / p)
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.modulus, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return hash((self.modulus.p, self._num, self._den))

    def __str__(self) -> str:
        # Canonical text form: every basis coefficient, rationals as num/den.
        parts = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*w")
            else:
                parts.append(f"{c}*w^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CycloNum(p={self.modulus.p}, '{self}')"


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    # Little-endian, trailing-zero-trimmed rational polynomials.
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    inv_lead = 1 / b[-1]
    while len(r) >= len(b) and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        shift = len(r) - len(b)
        factor = r[-1] * inv_lead
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r.pop()
    while r and not r[-1]:
        r.pop()
    while len(q) > 1 and not q[-1]:
        q.pop()
    return q, r


def _invert_mod_polynomial(a: list[Fraction], m: list[Fraction]):
    """Return (t, g) with t*a = g (mod m) and g a nonzero constant.

    Requires gcd(a, m) constant, which holds whenever m is irreducible and
    0 < deg a < deg m.
    """
    r0, r1 = m, list(a)
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while any(r1):
        q, r = _poly_divmod(r0, r1)
        width = max(len(t0), len(t1) + len(q) - 1)
        t = [Fraction(0)] * width
        for i, c in enumerate(t0):
            t[i] += c
        for i, qc in enumerate(q):
            if qc:
                for j, tc in enumerate(t1):
                    t[i + j] -= qc * tc
        while len(t) > 1 and not t[-1]:
            t.pop()
        r0, r1 = r1, r
        t0, t1 = t1, t
    if len(r0) != 1:
        raise ArithmeticError("nonconstant gcd against the minimal polynomial")
    return t0, r0[0]


class IntPolynomial:
    """Sparse polynomial in n variables with integer coefficients.

    Terms map exponent tuples (length n, entries >= 0) to nonzero integers.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms):
        if nvars < 1:
            raise ValueError("need at least one variable")
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            coeff = int(coeff)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have length {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.nvars = nvars
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def univariate(cls, coeffs) -> IntPolynomial:
        """Build a one-variable polynomial from a dense coefficient list."""
        return cls(1, {(i,): c for i, c in enumerate(coeffs) if c})

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def evaluate(self, args: list[CycloNum]) -> CycloNum:
        """Direct evaluation at cyclotomic arguments (used as a cross-check)."""
        if len(args) != self.nvars:
            raise ValueError("argument count mismatch")
        modulus = args[0].modulus
        total = CycloNum.zero(modulus)
        for exps, coeff in self.terms.items():
            term = CycloNum.from_rational(modulus, coeff)
            for base, e in zip(args, exps):
                if e:
                    term = term * base**e
            total = total + term
        return total

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"IntPolynomial({self.nvars}, {{{body}}})"


@dataclass(frozen=True)
class GaloisReport:
    """Outcome of the root-of-unity divisibility check."""

    vanishes_at_roots: bool
    value_at_one: int
    divisible_by_p: bool


def _validate_powers(poly: IntPolynomial, powers, modulus: PrimeModulus) -> list[int]:
    powers = [int(k) for k in powers]
    if len(powers) != poly.nvars:
        raise ValueError(
            f"expected {poly.nvars} powers, got {len(powers)}"
        )
    for k in powers:
        if not 0 <= k < modulus.p:
            raise ValueError(f"power {k} outside [0, {modulus.p})")
    return powers


def galois_reduce(poly: IntPolynomial, powers, modulus: PrimeModulus) -> IntPolynomial:
    """Substitute z_j = z^(k_j) and fold exponents mod z^p - 1.

    The result Q has degree at most p - 1, Q(1) = P(1, ..., 1), and
    Q(w) = P(w^(k_1), ..., w^(k_n)).
    """
    powers = _validate_powers(poly, powers, modulus)
    p = modulus.p
    folded: dict[tuple[int], int] = {}
    for exps, coeff in poly.terms.items():
        e = sum(ei * ki for ei, ki in zip(exps, powers)) % p
        folded[(e,)] = folded.get((e,), 0) + coeff
    return IntPolynomial(1, folded)


def galois_divisibility_check(poly: IntPolynomial, powers, modulus: PrimeModulus) -> GaloisReport:
    """Evaluate P at the given root-of-unity powers and report divisibility.

    If P(w^(k_1), ..., w^(k_n)) = 0 then P(1, ..., 1) must be a multiple of p;
    a vanishing value with a non-divisible integer is impossible and raises
    TheoremViolationError.
    """
    reduced = galois_reduce(poly, powers, modulus)
    p = modulus.p
    acc = [0] * p
    for (e,), coeff in reduced.terms.items():
        acc[e] += coeff
    vanishes = CycloNum._from_redundant(modulus, acc, 1).is_zero()
    value_at_one = poly.value_at_one()
    divisible = value_at_one % p == 0
    if vanishes and not divisible:
        raise TheoremViolationError(
            f"P vanishes at p-th roots of unity but P(1,...,1)={value_at_one} "
            f"is not divisible by p={p}"
        )
    return GaloisReport(vanishes, value_at_one, divisible)
