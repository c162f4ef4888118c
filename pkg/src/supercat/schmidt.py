"""Schmidt-vector arithmetic for bipartite pure states.

A state is represented by its Schmidt vector: the non-increasing probability
vector of squared Schmidt coefficients.  This is the complete description for
LOCC convertibility questions, which reduce to majorization of partial sums
(Nielsen's criterion).  All operations are pure functions; vectors are
immutable after construction.

Two arithmetic modes are supported through ComparisonPolicy: ordinary floats
with absolute tolerances, and exact rationals (fractions.Fraction) for inputs
given as short decimals or p/q strings, where majorization ties are decided
without ambiguity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence, Union

from .errors import DomainError, IndexOutOfRange, NegativeEntry, NotNormalized, PreconditionViolated

Real = Union[int, float, Fraction]

#: Construction tolerance: how far raw inputs may stray from the simplex.
NORM_TOL = 1e-9


@dataclass(frozen=True)
class ComparisonPolicy:
    """How numeric comparisons are decided.

    mode:        "float" compares with absolute tolerances, "exact" compares
                 rationals exactly (both tolerances are ignored).
    tol_eq:      slack allowed when testing non-strict inequalities/equality.
    tol_strict:  margin required before an inequality counts as strict.
    """

    mode: str = "float"
    tol_eq: float = 1e-12
    tol_strict: float = 1e-9

    def __post_init__(self):
        if self.mode not in ("float", "exact"):
            raise ValueError(f"unknown comparison mode {self.mode!r}")
        if self.tol_eq < 0 or self.tol_strict < 0:
            raise ValueError("tolerances must be non-negative")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def leq(self, x: Real, y: Real) -> bool:
        """x <= y, up to tol_eq slack in float mode."""
        if self.exact:
            return x <= y
        return x <= y + self.tol_eq

    def strictly_greater(self, x: Real, y: Real) -> bool:
        """x > y with a tol_strict margin in float mode."""
        if self.exact:
            return x > y
        return x > y + self.tol_strict

    def eq(self, x: Real, y: Real) -> bool:
        if self.exact:
            return x == y
        return abs(x - y) <= self.tol_eq

    def positive(self, x: Real) -> bool:
        """Is x positive enough to count as a non-zero coefficient?"""
        if self.exact:
            return x > 0
        return x > self.tol_eq


FLOAT_POLICY = ComparisonPolicy()
EXACT_POLICY = ComparisonPolicy(mode="exact")


@dataclass(frozen=True)
class SchmidtVector:
    """Non-increasing probability vector of squared Schmidt coefficients.

    Instances are built by make_schmidt (which validates, sorts, clamps and
    renormalizes) or arise from kron; the coefficients tuple is either all
    floats or all Fractions and is never mutated.
    """

    coefficients: tuple

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    @property
    def exact(self) -> bool:
        return bool(self.coefficients) and isinstance(self.coefficients[0], Fraction)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def padded(self, n: int) -> "SchmidtVector":
        """Same vector with zeros appended up to dimension n."""
        if n <= self.dim:
            return self
        zero = Fraction(0) if self.exact else 0.0
        return SchmidtVector(self.coefficients + (zero,) * (n - self.dim))

    def as_floats(self) -> tuple:
        return tuple(float(x) for x in self.coefficients)

    def to_json_value(self) -> list:
        """JSON form: decimals in float mode, "p/q" strings in exact mode."""
        if self.exact:
            return [f"{x.numerator}/{x.denominator}" for x in self.coefficients]
        return list(self.coefficients)


def _coerce(x, policy: ComparisonPolicy):
    if policy.exact:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, float):
            # interpret a float by its shortest decimal repr, so a literal
            # like 0.4 means 2/5 rather than its binary expansion
            return Fraction(str(x))
        return Fraction(x)
    return float(x)


def make_schmidt(raw: Iterable[Real], policy: ComparisonPolicy = FLOAT_POLICY,
                 norm_tol: float = NORM_TOL) -> SchmidtVector:
    """Validate, sort descending, clamp tiny negatives and renormalize.

    Raises NegativeEntry if any entry is below -norm_tol and NotNormalized if
    the total differs from 1 by more than norm_tol.
    """
    entries = [_coerce(x, policy) for x in raw]
    if not entries:
        raise NotNormalized("empty coefficient list")
    low = min(entries)
    if low < -norm_tol:
        raise NegativeEntry(f"coefficient {low} below -{norm_tol}")
    total = _total(entries)
    if abs(total - 1) > norm_tol:
        raise NotNormalized(f"coefficients sum to {total}, not 1")
    zero = Fraction(0) if policy.exact else 0.0
    entries = [max(x, zero) for x in entries]
    total = _total(entries)
    entries = [x / total for x in entries]
    entries.sort(reverse=True)
    return SchmidtVector(tuple(entries))


def _total(entries: Sequence[Real]):
    if entries and isinstance(entries[0], Fraction):
        return sum(entries)
    return math.fsum(entries)


def _pad_to_match(u: SchmidtVector, v: SchmidtVector):
    n = max(u.dim, v.dim)
    return u.padded(n), v.padded(n)


def prefix_sums(v: SchmidtVector) -> tuple:
    """All partial sums f_1..f_dim of the (already sorted) coefficients."""
    return tuple(accumulate(v.coefficients))


def partial_sum(v: SchmidtVector, k: int) -> Real:
    """Sum of the k largest coefficients, 1 <= k <= dim."""
    if not 1 <= k <= v.dim:
        raise IndexOutOfRange(f"k={k} outside [1, {v.dim}]")
    head = v.coefficients[:k]
    if v.exact:
        return sum(head)
    return math.fsum(head)


def majorizes(b: SchmidtVector, a: SchmidtVector,
              policy: ComparisonPolicy = FLOAT_POLICY) -> bool:
    """True when every partial sum of b weakly dominates a's (b majorizes a).

    Vectors of unequal length are zero-padded first.
    """
    b, a = _pad_to_match(b, a)
    return all(policy.leq(fa, fb) for fa, fb in zip(prefix_sums(a), prefix_sums(b)))


def nielsen_convertible(a: SchmidtVector, b: SchmidtVector,
                        policy: ComparisonPolicy = FLOAT_POLICY) -> bool:
    """Can the state with vector a reach b by LOCC?  Yes iff b majorizes a."""
    return majorizes(b, a, policy)


def kron(u: SchmidtVector, v: SchmidtVector) -> SchmidtVector:
    """Schmidt vector of the joint state: all pairwise products, sorted."""
    prods = sorted((x * y for x in u for y in v), reverse=True)
    return SchmidtVector(tuple(prods))


def entropy(v: SchmidtVector) -> float:
    """Entanglement entropy in bits, with 0*log(0) taken as 0."""
    return -math.fsum(float(p) * math.log2(float(p)) for p in v if p > 0)


def binary_entropy(x: Real, tol: float = NORM_TOL) -> float:
    """Entropy of the distribution (x, 1-x) in bits."""
    xf = float(x)
    if xf < -tol or xf > 1 + tol:
        raise DomainError(f"binary entropy argument {xf} outside [0, 1]")
    xf = min(max(xf, 0.0), 1.0)
    if xf in (0.0, 1.0):
        return 0.0
    return -xf * math.log2(xf) - (1 - xf) * math.log2(1 - xf)


def schmidt_rank(v: SchmidtVector, policy: ComparisonPolicy = FLOAT_POLICY) -> int:
    """Number of non-zero coefficients."""
    return sum(1 for x in v if policy.positive(x))


def split_partial_sum(u: SchmidtVector, c: SchmidtVector, k1: int, k2: int) -> Real:
    """c1 * (sum of k1 largest of u) + c2 * (sum of k2 largest of u).

    For a two-level auxiliary vector c, every partial sum of the joint vector
    u (x) c equals such a split for some k1 >= k2 with k1 + k2 = k, and
    dominates every other split of the same total.  The empty sum (k2 = 0)
    is 0.
    """
    if c.dim != 2:
        raise PreconditionViolated(f"auxiliary vector must have dimension 2, got {c.dim}")
    if not (k1 >= k2 >= 0):
        raise IndexOutOfRange(f"need k1 >= k2 >= 0, got k1={k1}, k2={k2}")
    if k1 > u.dim or k2 > u.dim:
        raise IndexOutOfRange(f"split indices ({k1}, {k2}) exceed dim {u.dim}")
    s1 = partial_sum(u, k1) if k1 else (Fraction(0) if u.exact else 0.0)
    s2 = partial_sum(u, k2) if k2 else (Fraction(0) if u.exact else 0.0)
    return c[0] * s1 + c[1] * s2
