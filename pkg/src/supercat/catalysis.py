"""Catalyst membership and the closed-form rank-2 catalyst interval.

A catalyst for an LOCC-blocked transformation a -> b is an auxiliary vector c
with b (x) c majorizing a (x) c.  For main systems of dimension at most 4 the
set of two-level catalysts (x, 1-x) is a closed interval in x, computed here
in closed form; its endpoints are the least and most entangled two-level
catalysts.  For higher catalyst ranks only search-based lower bounds on the
maximal catalyst entropy are available.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DegenerateDenominator, EmptyCatalystSet, PreconditionViolated
from .schmidt import (FLOAT_POLICY, ComparisonPolicy, Real, SchmidtVector, binary_entropy,
                      entropy, kron, majorizes, nielsen_convertible, prefix_sums, schmidt_rank)


@dataclass(frozen=True)
class CatalyticPair:
    """An ordered pair of main-system vectors, zero-padded to equal dimension.

    nontrivial records whether the bare transformation a -> b is blocked,
    i.e. whether a catalyst is needed at all.
    """

    a: SchmidtVector
    b: SchmidtVector
    policy: ComparisonPolicy = FLOAT_POLICY

    def __post_init__(self):
        n = max(self.a.dim, self.b.dim)
        object.__setattr__(self, "a", self.a.padded(n))
        object.__setattr__(self, "b", self.b.padded(n))

    @cached_property
    def nontrivial(self) -> bool:
        return not nielsen_convertible(self.a, self.b, self.policy)

    @cached_property
    def entropy_drop(self) -> float:
        return entropy(self.a) - entropy(self.b)


@dataclass(frozen=True)
class CatalystInterval:
    """The x-range [x_min, x_max] of two-level catalysts (x, 1-x)."""

    x_min: Real
    x_max: Real
    nonempty: bool

    def contains(self, x: Real) -> bool:
        return self.nonempty and self.x_min <= x <= self.x_max

    @property
    def width(self) -> float:
        return float(self.x_max) - float(self.x_min) if self.nonempty else 0.0

    def to_json_value(self) -> dict:
        return {"x_min": float(self.x_min), "x_max": float(self.x_max),
                "nonempty": self.nonempty}


def is_catalyst(pair: CatalyticPair, c: SchmidtVector) -> bool:
    """Membership of c in the catalyst set of the pair."""
    return majorizes(kron(pair.b, c), kron(pair.a, c), pair.policy)


def _require_dim4_nontrivial(pair: CatalyticPair, op: str):
    if not pair.nontrivial:
        raise PreconditionViolated(f"{op}: the transformation already succeeds without a catalyst")
    if schmidt_rank(pair.a, pair.policy) > 4 or schmidt_rank(pair.b, pair.policy) > 4:
        raise PreconditionViolated(f"{op}: both Schmidt ranks must be at most 4")


def necessary_conditions_4d(pair: CatalyticPair) -> bool:
    """Necessary partial-sum conditions for a rank <= 4 pair to admit a catalyst.

    f_1(a) <= f_1(b), f_2(a) > f_2(b) strictly, f_3(a) <= f_3(b).
    """
    _require_dim4_nontrivial(pair, "necessary_conditions_4d")
    a, b = pair.a.padded(4), pair.b.padded(4)
    fa, fb = prefix_sums(a), prefix_sums(b)
    p = pair.policy
    return p.leq(fa[0], fb[0]) and p.strictly_greater(fa[1], fb[1]) and p.leq(fa[2], fb[2])


def _half_one(exact: bool):
    if exact:
        return Fraction(1, 2), Fraction(1)
    return 0.5, 1.0


def rank2_catalyst_interval(pair: CatalyticPair) -> CatalystInterval:
    """Closed-form interval of two-level catalysts for rank <= 4 pairs.

    x_min is the larger of (a1+a2-b1)/(b2+b3) and 1-(a4-b4)/(b3-a3); x_max the
    smallest of b1/(a1+a2), (b1-a1)/(a2-b2) and 1-b4/(a3+a4).  A denominator
    can only vanish at the tolerance boundary of the necessary conditions; the
    corresponding constraint then degenerates to a sign condition (skip the
    term, or declare the set empty), which the grid oracle cross-validates.
    """
    _require_dim4_nontrivial(pair, "rank2_catalyst_interval")
    half, one = _half_one(pair.policy.exact)
    if not necessary_conditions_4d(pair):
        return CatalystInterval(one, half, False)

    a, b = pair.a.padded(4), pair.b.padded(4)
    a1, a2, a3, a4 = a.coefficients[:4]
    b1, b2, b3, b4 = b.coefficients[:4]
    p = pair.policy
    empty = False

    lower = []
    if p.positive(b2 + b3):
        lower.append((a1 + a2 - b1) / (b2 + b3))
    else:
        # b has rank 1 and majorizes everything; unreachable past the
        # nontriviality check
        raise DegenerateDenominator("b2 + b3 vanished for a nontrivial pair")
    den = b3 - a3
    if p.positive(den):
        lower.append(1 - (a4 - b4) / den)
    elif p.leq(b4, a4):
        pass  # constraint vacuous
    else:
        empty = True

    upper = [b1 / (a1 + a2)]
    den = a2 - b2
    if p.positive(den):
        upper.append((b1 - a1) / den)
    elif p.leq(a1, b1):
        pass
    else:
        empty = True
    den = a3 + a4
    if p.positive(den):
        upper.append(1 - b4 / den)
    elif not p.positive(b4):
        pass  # both states have rank <= 2 in the tail: no constraint
    else:
        empty = True

    x_min = max(max(lower), half)
    x_max = min(min(upper), one)
    if empty:
        return CatalystInterval(one, half, False)
    return CatalystInterval(x_min, x_max, x_min <= x_max)


def _two_level(x, exact: bool) -> SchmidtVector:
    one = Fraction(1) if exact else 1.0
    return SchmidtVector((x, one - x))


def probe_two_level(x: float, policy: ComparisonPolicy) -> SchmidtVector:
    """A (x, 1-x) probe in the policy's arithmetic.

    Exact mode takes the exact binary value of the float, so probe vectors
    sum to exactly 1 and membership verdicts carry no rounding noise.
    """
    if policy.exact:
        fx = Fraction(x)
        return SchmidtVector((fx, 1 - fx))
    return SchmidtVector((x, 1.0 - x))


def _probe_simplex(parts, steps: int, policy: ComparisonPolicy) -> SchmidtVector:
    if policy.exact:
        return SchmidtVector(tuple(Fraction(k, steps) for k in parts))
    return SchmidtVector(tuple(k / steps for k in parts))


def least_entangled_rank2_catalyst(pair: CatalyticPair) -> SchmidtVector:
    """The two-level catalyst with the least entanglement: (x_max, 1-x_max)."""
    interval = rank2_catalyst_interval(pair)
    if not interval.nonempty:
        raise EmptyCatalystSet("no two-level catalyst exists for this pair")
    return _two_level(interval.x_max, pair.policy.exact)


def most_entangled_rank2_catalyst(pair: CatalyticPair) -> SchmidtVector:
    """The two-level catalyst with the most entanglement: (x_min, 1-x_min)."""
    interval = rank2_catalyst_interval(pair)
    if not interval.nonempty:
        raise EmptyCatalystSet("no two-level catalyst exists for this pair")
    return _two_level(interval.x_min, pair.policy.exact)


def returned_rank_bound(pair: CatalyticPair, c: SchmidtVector) -> int:
    """Largest Schmidt rank any returned state can have when c is borrowed.

    Schmidt rank is multiplicative under composition and cannot grow under
    LOCC, so floor(SR(a) * SR(c) / SR(b)) bounds the returned state's rank.
    """
    ra = schmidt_rank(pair.a, pair.policy)
    rb = schmidt_rank(pair.b, pair.policy)
    rc = schmidt_rank(c, pair.policy)
    return (ra * rc) // rb


@dataclass(frozen=True)
class SearchBudget:
    """Effort knobs for the rank >= 3 catalyst-entropy search."""

    grid_step: float = 1.0 / 60.0
    samples: int = 2000
    seed: int = 0


@dataclass(frozen=True)
class CatalystEntropySearch:
    """Maximal catalyst entropy of bounded rank, with its certificate.

    exact is True only when the value comes from the closed-form interval
    (rank 2, main dimension <= 4); otherwise the value is a search-based
    lower bound on the true maximum.
    """

    value: float
    certificate: SchmidtVector
    exact: bool


def _ordered_simplex_grid(r: int, steps: int):
    """Integer compositions k1 >= k2 >= ... >= kr >= 0 with sum = steps."""

    def rec(remaining, cap, parts):
        if len(parts) == r - 1:
            if remaining <= cap:
                yield parts + (remaining,)
            return
        lo = -(-remaining // (r - len(parts)))  # ceil: keep room for descending tail
        for k in range(min(cap, remaining), lo - 1, -1):
            yield from rec(remaining - k, k, parts + (k,))

    yield from rec(steps, steps, ())


def _rank2_scan(pair: CatalyticPair, resolution: float, refine_tol: float = 1e-9):
    """Smallest catalytic x over two-level catalysts (x, 1-x), or None.

    Scans [0.5, 1] at the given resolution, then bisects the verdict boundary.
    """
    resolution = min(resolution, 1e-3)
    steps = int(round(0.5 / resolution))
    xs = [min(0.5 + i * resolution, 1.0) for i in range(steps + 1)]
    verdicts = [is_catalyst(pair, probe_two_level(x, pair.policy)) for x in xs]
    if not any(verdicts):
        return None
    i = verdicts.index(True)
    if i == 0:
        return xs[0]
    bad, good = xs[i - 1], xs[i]
    while good - bad > refine_tol:
        mid = 0.5 * (bad + good)
        if is_catalyst(pair, probe_two_level(mid, pair.policy)):
            good = mid
        else:
            bad = mid
    return good


def max_catalyst_entropy(pair: CatalyticPair, r: int,
                         budget: SearchBudget = SearchBudget()) -> CatalystEntropySearch:
    """Largest entanglement entropy over catalysts of Schmidt rank <= r.

    For r = 2 with main dimension at most 4 the answer is the binary entropy
    of the closed-form x_min, and is exact.  For larger ranks the catalyst
    set has no known characterization, so the value is a deterministic
    grid-plus-random lower bound, flagged approximate.
    """
    if r < 1:
        raise PreconditionViolated("catalyst rank bound must be at least 1")
    if not pair.nontrivial:
        raise PreconditionViolated("pair is convertible without a catalyst")
    if r == 1:
        # a separable catalyst changes nothing, so none exists for a
        # nontrivial pair
        raise EmptyCatalystSet("separable states never catalyze a blocked transformation")

    dim4 = schmidt_rank(pair.a, pair.policy) <= 4 and schmidt_rank(pair.b, pair.policy) <= 4
    if r == 2 and dim4:
        interval = rank2_catalyst_interval(pair)
        if not interval.nonempty:
            raise EmptyCatalystSet("closed-form interval is empty")
        cert = _two_level(interval.x_min, pair.policy.exact)
        return CatalystEntropySearch(binary_entropy(interval.x_min), cert, True)

    if r == 2:
        x = _rank2_scan(pair, budget.grid_step)
        if x is None:
            raise EmptyCatalystSet("no two-level catalyst found at this resolution")
        return CatalystEntropySearch(binary_entropy(x), _two_level(x, False), False)

    best_val, best_cert = -1.0, None
    if dim4:
        # rank-2 catalysts are members of every larger-rank catalyst set
        interval = rank2_catalyst_interval(pair)
        if interval.nonempty:
            cert = _two_level(interval.x_min, pair.policy.exact)
            best_val, best_cert = binary_entropy(interval.x_min), cert

    steps = max(2, int(round(1.0 / budget.grid_step)))
    candidates = [_probe_simplex(parts, steps, pair.policy)
                  for parts in _ordered_simplex_grid(r, steps)]
    rng = random.Random(budget.seed)
    for _ in range(budget.samples):
        raw = sorted((rng.random() for _ in range(r)), reverse=True)
        if pair.policy.exact:
            exact_raw = [Fraction(x) for x in raw]
            total = sum(exact_raw)
            candidates.append(SchmidtVector(tuple(x / total for x in exact_raw)))
        else:
            total = sum(raw)
            candidates.append(SchmidtVector(tuple(x / total for x in raw)))

    for v in candidates:
        ent = entropy(v)
        if ent > best_val and is_catalyst(pair, v):
            best_val, best_cert = ent, v

    if best_cert is None:
        raise EmptyCatalystSet(f"no catalyst of rank <= {r} found within the search budget")
    return CatalystEntropySearch(best_val, best_cert, False)
