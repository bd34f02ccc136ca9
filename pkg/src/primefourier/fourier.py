"""Exact Fourier analysis on Z/pZ.

The transform is normalized as fhat(xi) = (1/p) * sum_x f(x) w^(-x*xi) with
the 1/p carried as an exact rational, so supports are decided by the sound
zero test of CycloNum.  Alongside the transform live its inverse, cyclic
convolution, square minors of the character table (w^(x*xi)), exact minor
determinants and solves by Gaussian elimination over Q(w), and the mod-p
Vandermonde product used to certify minor non-singularity residue-wise.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .cyclotomic import CycloNum, PrimeModulus
from .errors import TheoremViolationError


class SupportSet:
    """A subset of Z/pZ kept as a sorted, duplicate-free residue tuple."""

    __slots__ = ("modulus", "members")

    def __init__(self, modulus: PrimeModulus, members=()):
        members = sorted({int(x) for x in members})
        for x in members:
            if not 0 <= x < modulus.p:
                raise ValueError(f"residue {x} outside [0, {modulus.p})")
        self.modulus = modulus
        self.members = tuple(members)

    @classmethod
    def full(cls, modulus: PrimeModulus) -> SupportSet:
        return cls(modulus, range(modulus.p))

    def complement(self) -> SupportSet:
        inside = set(self.members)
        return SupportSet(self.modulus, (x for x in range(self.modulus.p) if x not in inside))

    def intersection(self, other: SupportSet) -> SupportSet:
        self._check_same(other)
        return SupportSet(self.modulus, set(self.members) & set(other.members))

    def union(self, other: SupportSet) -> SupportSet:
        self._check_same(other)
        return SupportSet(self.modulus, set(self.members) | set(other.members))

    def translate(self, a: int) -> SupportSet:
        p = self.modulus.p
        return SupportSet(self.modulus, ((x + a) % p for x in self.members))

    def is_subset(self, other: SupportSet) -> bool:
        self._check_same(other)
        return set(self.members) <= set(other.members)

    def _check_same(self, other: SupportSet) -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus.p} vs {other.modulus.p}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SupportSet)
            and self.modulus == other.modulus
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.modulus.p, self.members))

    def __repr__(self) -> str:
        return f"SupportSet(p={self.modulus.p}, {{{', '.join(map(str, self.members))}}})"


class SignalFn:
    """An exact function Z/pZ -> Q(w): a tuple of p cyclotomic values."""

    __slots__ = ("modulus", "values")

    def __init__(self, modulus: PrimeModulus, values):
        vals = []
        for v in values:
            if isinstance(v, CycloNum):
                if v.modulus != modulus:
                    raise ValueError("value modulus mismatch")
                vals.append(v)
            else:
                vals.append(CycloNum.from_rational(modulus, v))
        if len(vals) != modulus.p:
            raise ValueError(f"expected {modulus.p} values, got {len(vals)}")
        self.modulus = modulus
        self.values = tuple(vals)

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> SignalFn:
        return cls(modulus, [0] * modulus.p)

    @classmethod
    def dirac(cls, modulus: PrimeModulus, at: int, value=1) -> SignalFn:
        vals = [0] * modulus.p
        vals[at % modulus.p] = value
        return cls(modulus, vals)

    @classmethod
    def constant(cls, modulus: PrimeModulus, value=1) -> SignalFn:
        return cls(modulus, [value] * modulus.p)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def translate(self, a: int) -> SignalFn:
        """The signal x -> f(x - a)."""
        p = self.modulus.p
        return SignalFn(self.modulus, [self.values[(x - a) % p] for x in range(p)])

    def modulate(self, b: int) -> SignalFn:
        """The signal x -> f(x) * w^(b*x)."""
        p = self.modulus.p
        return SignalFn(
            self.modulus,
            [v * CycloNum.root_power(self.modulus, b * x) for x, v in enumerate(self.values)],
        )

    def embed(self) -> list[complex]:
        return [v.embed() for v in self.values]

    def __add__(self, other: SignalFn) -> SignalFn:
        if not isinstance(other, SignalFn):
            return NotImplemented
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        return SignalFn(self.modulus, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, scalar) -> SignalFn:
        if not isinstance(scalar, (int, Fraction, CycloNum)):
            return NotImplemented
        return SignalFn(self.modulus, [v * scalar for v in self.values])

    __rmul__ = __mul__

    def __getitem__(self, x: int) -> CycloNum:
        return self.values[x % self.modulus.p]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignalFn)
            and self.modulus == other.modulus
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.modulus.p, self.values))

    def __repr__(self) -> str:
        return f"SignalFn(p={self.modulus.p}, [{', '.join(str(v) for v in self.values)}])"


def _scaled_sparse(values) -> tuple[list[list[tuple[int, int]]], int]:
    # Rewrite every value over one common denominator D and keep only the
    # nonzero numerator entries; the accumulation loops then run on plain ints.
    dens = [v._den for v in values]
    common = 1
    for d in dens:
        common = common * d // math.gcd(common, d)
    sparse = []
    for v, d in zip(values, dens):
        m = common // d
        sparse.append([(i, c * m) for i, c in enumerate(v._num) if c])
    return sparse, common


def dft(f: SignalFn) -> SignalFn:
    """Exact transform fhat(xi) = (1/p) * sum_x f(x) * w^(-x*xi)."""
    modulus = f.modulus
    p = modulus.p
    sparse, common = _scaled_sparse(f.values)
    den = common * p
    out = []
    for xi in range(p):
        acc = [0] * p
        for x, terms in enumerate(sparse):
            if not terms:
                continue
            s = (-x * xi) % p
            for i, c in terms:
                j = i + s
                acc[j - p if j >= p else j] += c
        out.append(CycloNum._from_redundant(modulus, acc, den))
    return SignalFn(modulus, out)


def idft(spectrum: SignalFn) -> SignalFn:
    """Inverse transform f(x) = sum_xi F(xi) * w^(x*xi); idft(dft(f)) == f."""
    modulus = spectrum.modulus
    p = modulus.p
    sparse, common = _scaled_sparse(spectrum.values)
    out = []
    for x in range(p):
        acc = [0] * p
        for xi, terms in enumerate(sparse):
            if not terms:
                continue
            s = (x * xi) % p
            for i, c in terms:
                j = i + s
                acc[j - p if j >= p else j] += c
        out.append(CycloNum._from_redundant(modulus, acc, common))
    return SignalFn(modulus, out)


def support(f: SignalFn) -> SupportSet:
    """The set of points where f is nonzero (exact)."""
    return SupportSet(f.modulus, (x for x, v in enumerate(f.values) if not v.is_zero()))


def convolve(f: SignalFn, g: SignalFn) -> SignalFn:
    """Cyclic convolution (f*g)(x) = sum_y f(y) g(x-y).

    Satisfies dft(f*g) = p * dft(f) * dft(g) pointwise, hence the Fourier
    support of f*g is the intersection of the factors' Fourier supports.
    """
    if f.modulus != g.modulus:
        raise ValueError("modulus mismatch")
    modulus = f.modulus
    p = modulus.p
    out = []
    for x in range(p):
        total = CycloNum.zero(modulus)
        for y, fy in enumerate(f.values):
            if fy.is_zero():
                continue
            total = total + fy * g.values[(x - y) % p]
        out.append(total)
    return SignalFn(modulus, out)


class FourierMinor:
    """A square submatrix (w^(x_j * xi_k)) of the p x p character table."""

    __slots__ = ("modulus", "rows", "cols", "entries")

    def __init__(self, modulus: PrimeModulus, rows: SupportSet, cols: SupportSet,
                 entries: tuple[tuple[CycloNum, ...], ...]):
        self.modulus = modulus
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.rows)

    def apply(self, vec: list[CycloNum]) -> list[CycloNum]:
        """Matrix-vector product, used to check solve residuals exactly."""
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            total = CycloNum.zero(self.modulus)
            for entry, v in zip(row, vec):
                total = total + entry * v
            out.append(total)
        return out

    def __repr__(self) -> str:
        return (
            f"FourierMinor(p={self.modulus.p}, rows={self.rows.members}, "
            f"cols={self.cols.members})"
        )


def minor_matrix(modulus: PrimeModulus, rows: SupportSet, cols: SupportSet) -> FourierMinor:
    """The minor selected by distinct positions (rows) and frequencies (cols)."""
    if len(rows) == 0 or len(cols) == 0:
        raise ValueError("row and column sets must be nonempty")
    if len(rows) != len(cols):
        raise ValueError(f"size mismatch: {len(rows)} rows vs {len(cols)} cols")
    if rows.modulus != modulus or cols.modulus != modulus:
        raise ValueError("modulus mismatch")
    p = modulus.p
    entries = tuple(
        tuple(CycloNum.root_power(modulus, x * xi) for xi in cols.members)
        for x in rows.members
    )
    return FourierMinor(modulus, rows, cols, entries)


def minor_det(minor: FourierMinor) -> CycloNum:
    """Exact determinant by Gaussian elimination over Q(w).

    Pivots are the first nonzero entry in each column by row order.  For
    distinct rows and columns over prime p the result is provably nonzero;
    a pivotless column would mean a singular minor and raises
    TheoremViolationError.
    """
    n = minor.n
    a = [list(row) for row in minor.entries]
    det = CycloNum.one(minor.modulus)
    negate = False
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise TheoremViolationError(
                f"singular Fourier minor rows={minor.rows.members} "
                f"cols={minor.cols.members} (p={minor.modulus.p}); "
                "this contradicts the non-singularity of prime-order minors"
            )
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            negate = not negate
        pivot = a[col][col]
        det = det * pivot
        if col + 1 == n:
            break
        inv = pivot.inverse()
        for r in range(col + 1, n):
            lead = a[r][col]
            if lead.is_zero():
                continue
            factor = lead * inv
            row = a[r]
            top = a[col]
            for c in range(col + 1, n):
                row[c] = row[c] - factor * top[c]
    return -det if negate else det


def minor_solve(minor: FourierMinor, rhs) -> list[CycloNum]:
    """The unique exact solution of M*c = rhs (elimination + back substitution)."""
    n = minor.n
    modulus = minor.modulus
    b = []
    for v in rhs:
        b.append(v if isinstance(v, CycloNum) else CycloNum.from_rational(modulus, v))
    if len(b) != n:
        raise ValueError(f"right-hand side must have length {n}, got {len(b)}")
    a = [list(row) for row in minor.entries]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise TheoremViolationError(
                "singular Fourier minor encountered during solve; "
                "this contradicts the non-singularity of prime-order minors"
            )
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            b[piv], b[col] = b[col], b[piv]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            lead = a[r][col]
            if lead.is_zero():
                continue
            factor = lead * inv
            row = a[r]
            top = a[col]
            for c in range(col + 1, n):
                row[c] = row[c] - factor * top[c]
            b[r] = b[r] - factor * b[col]
    sol: list[CycloNum] = [CycloNum.zero(modulus)] * n
    for i in range(n - 1, -1, -1):
        total = b[i]
        row = a[i]
        for j in range(i + 1, n):
            total = total - row[j] * sol[j]
        sol[i] = total * row[i].inverse()
    return sol


@functools.lru_cache(maxsize=1 << 16)
def _cached_minor_det(p: int, rows: tuple[int, ...], cols: tuple[int, ...]) -> CycloNum:
    modulus = PrimeModulus(p)
    return minor_det(minor_matrix(modulus, SupportSet(modulus, rows), SupportSet(modulus, cols)))


def vandermonde_det_mod_p(cols: SupportSet) -> int:
    """prod_{k<k'} (xi_k - xi_k') mod p over the sorted members of cols.

    Nonzero for any set of distinct residues modulo a prime; a zero result
    is impossible and raises TheoremViolationError.
    """
    if len(cols) == 0:
        raise ValueError("column set must be nonempty")
    p = cols.modulus.p
    total = 1
    members = cols.members
    for k in range(len(members)):
        for kk in range(k + 1, len(members)):
            total = total * (members[k] - members[kk]) % p
    if total == 0:
        raise TheoremViolationError(
            f"Vandermonde product vanished mod {p} for distinct residues {members}"
        )
    return total
