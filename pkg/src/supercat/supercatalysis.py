"""Supercatalytic gain: computation, optimization, bounds and constructions.

A supercatalytic transformation borrows an auxiliary state c, performs the
otherwise impossible main-system transformation a -> b, and returns a state d
that is strictly better than c under every entanglement measure (d -> c by
LOCC, d != c).  The gain measures which fraction of the main system's entropy
drop is recovered in the auxiliary system:

    gain = (E(d) - E(c)) / (E(a) - E(b)),   always in [0, 1].

For a fixed borrowed two-level state the best returned two-level state is
found exactly: the prefix sums of b (x) (y, 1-y) are piecewise linear in y
with breakpoints where two product coefficients tie, so the feasible set of y
is a finite union of closed intervals and the optimum is the feasible point
closest to 1/2.  Higher returned ranks fall back to a simplex grid search
and are flagged approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalysis import (CatalyticPair, CatalystInterval, SearchBudget, _ordered_simplex_grid,
                        _probe_simplex, is_catalyst, max_catalyst_entropy,
                        rank2_catalyst_interval, returned_rank_bound)
from .errors import (EmptyCatalystSet, InvalidConfiguration, InvalidEpsilon, NotACatalyst,
                     PreconditionViolated, ZeroDenominator)
from .schmidt import (FLOAT_POLICY, ComparisonPolicy, Real, SchmidtVector, binary_entropy,
                      entropy, kron, majorizes, make_schmidt, nielsen_convertible, prefix_sums,
                      schmidt_rank)

EXACT_METHOD = "exact-piecewise-linear"
GRID_METHOD = "grid-approximate"


@dataclass(frozen=True)
class GainResult:
    """A gain value together with the returned state that certifies it."""

    gain: float
    returned_state: SchmidtVector
    feasible: bool
    method: str

    def to_json_value(self) -> dict:
        return {"gain": self.gain, "returned_state": self.returned_state.to_json_value(),
                "feasible": self.feasible, "method": self.method}


@dataclass(frozen=True)
class SweepPoint:
    """One borrowed state of a sweep: parameter, entropy, gain and its bound."""

    x: float
    entropy_c: float
    gmax: float
    bound: float


@dataclass(frozen=True)
class SweepResult:
    """A full sweep over the two-level catalyst range."""

    points: tuple
    tilde_gmax: float
    argmax_x: float
    interval: CatalystInterval
    envelope_bound: float
    n_points: int

    @property
    def gmax_at_x_min(self) -> float:
        return self.points[0].gmax

    @property
    def gmax_at_x_max(self) -> float:
        return self.points[-1].gmax

    def interior_optimum(self, margin: float = 1e-9) -> bool:
        """Does some interior borrowed state beat both interval endpoints?"""
        return (self.tilde_gmax > self.gmax_at_x_min + margin
                and self.tilde_gmax > self.gmax_at_x_max + margin)


@dataclass(frozen=True)
class SupercatalysisVerdict:
    """Per-condition report for a candidate supercatalytic quadruple."""

    base_blocked: bool
    states_differ: bool
    joint_feasible: bool
    returned_reaches_borrowed: bool
    borrowed_is_catalyst: bool
    returned_is_catalyst: bool

    @property
    def ok(self) -> bool:
        return (self.base_blocked and self.states_differ and self.joint_feasible
                and self.returned_reaches_borrowed)

    @property
    def consistency_error(self) -> bool:
        # both states must be catalysts whenever the four defining conditions
        # hold; anything else signals an internal problem
        return self.ok and not (self.borrowed_is_catalyst and self.returned_is_catalyst)

    def to_json_value(self) -> dict:
        return {"base_blocked": self.base_blocked, "states_differ": self.states_differ,
                "joint_feasible": self.joint_feasible,
                "returned_reaches_borrowed": self.returned_reaches_borrowed,
                "borrowed_is_catalyst": self.borrowed_is_catalyst,
                "returned_is_catalyst": self.returned_is_catalyst,
                "ok": self.ok, "consistency_error": self.consistency_error}


def _sorted_equal(u: SchmidtVector, v: SchmidtVector, policy: ComparisonPolicy) -> bool:
    n = max(u.dim, v.dim)
    u, v = u.padded(n), v.padded(n)
    return all(policy.eq(x, y) for x, y in zip(u, v))


def gain(a: SchmidtVector, b: SchmidtVector, c: SchmidtVector, d: SchmidtVector,
         policy: ComparisonPolicy = FLOAT_POLICY) -> float:
    """Entanglement gain of the configuration (a, b, borrowed c, returned d).

    The quadruple must be a valid configuration: a cannot reach b unaided,
    a (x) c reaches b (x) d, and d reaches c.  Returning d = c is allowed and
    yields 0 (plain catalysis).  When the joint vectors coincide up to
    reordering the transformation is a local unitary and the gain is exactly
    1; this shortcut keeps the trivial-swap construction exact in float mode.
    """
    failures = []
    if nielsen_convertible(a, b, policy):
        failures.append("main transformation needs no catalyst")
    if not majorizes(kron(b, d), kron(a, c), policy):
        failures.append("joint transformation a(x)c -> b(x)d is infeasible")
    if not nielsen_convertible(d, c, policy):
        failures.append("returned state cannot reach borrowed state")
    if failures:
        raise InvalidConfiguration(failures)
    drop = entropy(a) - entropy(b)
    if drop <= policy.tol_strict:
        raise ZeroDenominator(f"entropy drop {drop} too small")
    if _sorted_equal(c, d, policy):
        return 0.0
    if _sorted_equal(kron(a, c), kron(b, d), policy):
        return 1.0
    g = (entropy(d) - entropy(c)) / drop
    return min(max(g, 0.0), 1.0)


def check_supercatalytic(a: SchmidtVector, b: SchmidtVector, c: SchmidtVector,
                         d: SchmidtVector,
                         policy: ComparisonPolicy = FLOAT_POLICY) -> SupercatalysisVerdict:
    """Evaluate each defining condition of supercatalysis separately."""
    pair = CatalyticPair(a, b, policy)
    return SupercatalysisVerdict(
        base_blocked=pair.nontrivial,
        states_differ=not _sorted_equal(c, d, policy),
        joint_feasible=majorizes(kron(b, d), kron(a, c), policy),
        returned_reaches_borrowed=nielsen_convertible(d, c, policy),
        borrowed_is_catalyst=is_catalyst(pair, c),
        returned_is_catalyst=is_catalyst(pair, d),
    )


def _typed_consts(exact: bool):
    if exact:
        return Fraction(0), Fraction(1, 2), Fraction(1)
    return 0.0, 0.5, 1.0


def _min_feasible_y(b_coeffs: Sequence[Real], targets: Sequence[Real], lo: Real, hi: Real,
                    policy: ComparisonPolicy) -> Optional[Real]:
    """Smallest y in [lo, hi] with every prefix sum of b (x) (y, 1-y) at least
    the corresponding target.

    Between consecutive breakpoints (y values where b_i * y == b_j * (1-y))
    the sorted order of the 2n products is constant, so each prefix sum is a
    linear function of y and every constraint clips the segment to a
    subinterval.  Segments are visited left to right; the first nonempty
    feasible subinterval yields the optimum.

    In float mode, constraints that are constant in y are compared with
    tol_eq slack so exact ties survive rounding; sloped constraints are
    solved without slack, since slack would shift the optimum and let the
    reported gain creep past its upper bound.
    """
    if lo > hi:
        return None
    exact = policy.exact
    zero, _, one = _typed_consts(exact)
    slack = zero if exact else policy.tol_eq
    slope_tol = zero if exact else policy.tol_eq

    if lo == hi:
        prods = sorted((bi * w for bi in b_coeffs for w in (lo, one - lo)), reverse=True)
        running = zero
        for k in range(2 * len(b_coeffs)):
            running += prods[k]
            if running < targets[k] - slack:
                return None
        return lo

    cuts = {lo, hi}
    for bi in b_coeffs:
        for bj in b_coeffs:
            den = bi + bj
            if den > 0:
                y = bj / den
                if lo < y < hi:
                    cuts.add(y)
    points = sorted(cuts)

    n_constraints = 2 * len(b_coeffs)
    for seg_lo, seg_hi in zip(points, points[1:]):
        mid = (seg_lo + seg_hi) / 2
        terms = [(bi * mid, bi, zero) for bi in b_coeffs]
        terms += [(bi * (one - mid), zero, bi) for bi in b_coeffs]
        terms.sort(key=lambda t: t[0], reverse=True)

        cur_lo, cur_hi = seg_lo, seg_hi
        ok = True
        coef_y = zero
        coef_const = zero
        for k in range(n_constraints):
            coef_y += terms[k][1]
            coef_const += terms[k][2]
            slope = coef_y - coef_const
            if slope > slope_tol:
                bound = (targets[k] - coef_const) / slope
                if bound > cur_lo:
                    cur_lo = bound
            elif slope < -slope_tol:
                bound = (targets[k] - coef_const) / slope
                if bound < cur_hi:
                    cur_hi = bound
            else:
                # constraint is (numerically) constant on the segment
                if coef_y * mid + coef_const * (one - mid) < targets[k] - slack:
                    ok = False
                    break
            if cur_lo > cur_hi:
                ok = False
                break
        if ok and cur_lo <= cur_hi:
            return cur_lo
    return None


def _exact_rank2_gain(pair: CatalyticPair, c: SchmidtVector) -> GainResult:
    """Exact best gain when the returned state is forced to two levels."""
    policy = pair.policy
    _, half, _ = _typed_consts(policy.exact)
    c1 = c[0]
    n = pair.b.dim
    targets = prefix_sums(kron(pair.a, c))[:2 * n]
    y = _min_feasible_y(pair.b.coefficients, targets, half, c1, policy)

    no_better = y is None
    if not no_better:
        if policy.exact:
            no_better = y >= c1
        else:
            no_better = y >= c1 - policy.tol_strict
    if no_better:
        return GainResult(0.0, c, True, EXACT_METHOD)

    one = Fraction(1) if policy.exact else 1.0
    d = SchmidtVector((y, one - y))
    g = (binary_entropy(y) - entropy(c)) / pair.entropy_drop
    return GainResult(min(max(g, 0.0), 1.0), d, True, EXACT_METHOD)


def _ordered_descending(t) -> bool:
    return all(t[i] >= t[i + 1] for i in range(len(t) - 1)) and t[-1] >= 0


def _grid_rank_gain(pair: CatalyticPair, c: SchmidtVector, rank_cap: int,
                    grid_steps: Optional[int]) -> GainResult:
    """Approximate best gain over returned states of rank <= rank_cap."""
    policy = pair.policy
    target = kron(pair.a, c)
    ent_c = entropy(c)

    def feasible(v: SchmidtVector) -> bool:
        return majorizes(kron(pair.b, v), target, policy) and majorizes(c, v, policy)

    best_ent, best_d = ent_c, c
    if schmidt_rank(c, policy) <= 2:
        seed = _exact_rank2_gain(pair, c)
        ent = entropy(seed.returned_state)
        if ent > best_ent:
            best_ent, best_d = ent, seed.returned_state

    if grid_steps is None:
        grid_steps = {3: 200, 4: 60, 5: 24}.get(rank_cap, 12)
    for parts in _ordered_simplex_grid(rank_cap, grid_steps):
        v = _probe_simplex(parts, grid_steps, policy)
        ent = entropy(v)
        if ent > best_ent and feasible(v):
            best_ent, best_d = ent, v

    # local hill-climb around the best candidate with shrinking moves
    zero = Fraction(0) if policy.exact else 0.0
    cur = tuple(best_d.padded(rank_cap).coefficients[:rank_cap])
    step = Fraction(1, grid_steps) if policy.exact else 1.0 / grid_steps
    while step > 1e-7:
        improved = False
        for i in range(rank_cap):
            for j in range(rank_cap):
                if i == j:
                    continue
                cand = list(cur)
                cand[i] += step
                cand[j] -= step
                cand.sort(reverse=True)
                if cand[-1] < zero:
                    continue
                v = SchmidtVector(tuple(cand))
                ent = entropy(v)
                if ent > best_ent and feasible(v):
                    best_ent, best_d, cur = ent, v, tuple(cand)
                    improved = True
        if not improved:
            step /= 2
    if best_ent <= ent_c + 1e-12:
        return GainResult(0.0, c, True, GRID_METHOD)
    g = (best_ent - ent_c) / pair.entropy_drop
    return GainResult(min(max(g, 0.0), 1.0), best_d, True, GRID_METHOD)


def gmax_given_c(pair: CatalyticPair, c: SchmidtVector,
                 grid_steps: Optional[int] = None) -> GainResult:
    """Best achievable gain for the pair when c is the borrowed state.

    Maximizes the entropy of the returned state d subject to the joint
    transformation being feasible, d reaching c by LOCC, and the returned
    Schmidt rank staying within its multiplicativity bound.  Two-level
    returned states are optimized exactly; higher rank caps use a grid
    search.  When no returned state beats c the result is plain catalysis:
    gain 0 with d = c.
    """
    if not is_catalyst(pair, c):
        raise NotACatalyst("the borrowed state is not a catalyst for this pair")
    if pair.entropy_drop <= pair.policy.tol_strict:
        raise PreconditionViolated("main transformation has no entropy drop")
    rank_cap = returned_rank_bound(pair, c)
    if rank_cap <= 2:
        return _exact_rank2_gain(pair, c)
    return _grid_rank_gain(pair, c, rank_cap, grid_steps)


def bound_gmax(pair: CatalyticPair, c: SchmidtVector,
               budget: SearchBudget = SearchBudget()) -> float:
    """Upper bound on the gain for borrowed state c.

    The returned state is confined to catalysts of rank at most the
    multiplicativity bound, so its entropy cannot exceed the maximal catalyst
    entropy of that rank.  The bound is exact whenever that maximum has a
    closed form (rank cap 2 with main dimension at most 4); for larger caps
    it inherits the lower-bound character of the entropy search.
    """
    if not is_catalyst(pair, c):
        raise NotACatalyst("the borrowed state is not a catalyst for this pair")
    if pair.entropy_drop <= pair.policy.tol_strict:
        raise PreconditionViolated("main transformation has no entropy drop")
    rank_cap = returned_rank_bound(pair, c)
    search = max_catalyst_entropy(pair, rank_cap, budget)
    ent_c = entropy(c)
    top = max(search.value, ent_c)  # c itself is a catalyst of admissible rank
    return (top - ent_c) / pair.entropy_drop


def _affine_grid(lo: Real, hi: Real, n: int):
    span = hi - lo
    return [lo + span * i / (n - 1) for i in range(n)]


def tilde_gmax_sweep(pair: CatalyticPair, n_points: int = 200,
                     refine_tol: float = 1e-9) -> SweepResult:
    """Sweep the whole two-level catalyst range and maximize the gain.

    Samples n_points values of x uniformly over [x_min, x_max] (endpoints
    included), computes the exact best gain and its upper bound at each, then
    refines locally around the best sample.  The reported maximum is a
    certified lower bound on the minimal-scenario optimum; the envelope value
    (bound at the least entangled catalyst) is the matching upper bound when
    it is attained.
    """
    if n_points < 2:
        raise PreconditionViolated("a sweep needs at least two points")
    if not pair.nontrivial:
        raise PreconditionViolated("pair is convertible without a catalyst")
    interval = rank2_catalyst_interval(pair)
    if not interval.nonempty:
        raise EmptyCatalystSet("no two-level catalyst exists for this pair")

    exact = pair.policy.exact
    _, _, one = _typed_consts(exact)

    def gain_at(x) -> float:
        c = SchmidtVector((x, one - x))
        return gmax_given_c(pair, c).gain

    xs = _affine_grid(interval.x_min, interval.x_max, n_points)
    points = []
    for x in xs:
        c = SchmidtVector((x, one - x))
        g = gmax_given_c(pair, c).gain
        bnd = bound_gmax(pair, c)
        points.append(SweepPoint(float(x), binary_entropy(x), g, bnd))

    values = [p.gmax for p in points]
    i_best = max(range(len(values)), key=values.__getitem__)
    best_x, best_v = xs[i_best], values[i_best]

    lo = xs[i_best - 1] if i_best > 0 else xs[0]
    hi = xs[i_best + 1] if i_best < len(xs) - 1 else xs[-1]
    for _ in range(40):
        if float(hi - lo) <= refine_tol:
            break
        grid = _affine_grid(lo, hi, 9)
        vals = [gain_at(x) for x in grid]
        j = max(range(9), key=vals.__getitem__)
        if vals[j] > best_v:
            best_v, best_x = vals[j], grid[j]
        lo = grid[max(0, j - 1)]
        hi = grid[min(8, j + 1)]

    envelope = (binary_entropy(interval.x_min) - binary_entropy(interval.x_max)) / pair.entropy_drop
    return SweepResult(points=tuple(points), tilde_gmax=best_v, argmax_x=float(best_x),
                       interval=interval, envelope_bound=envelope, n_points=n_points)


def rank_reduce_returned(d: SchmidtVector, c: SchmidtVector,
                         policy: ComparisonPolicy = FLOAT_POLICY) -> SchmidtVector:
    """Collapse a returned state of rank >= 3 to rank 3, preserving the chain.

    For a two-level target c the replacement (c1, (1-c1)/2 + alpha,
    (1-c1)/2 - alpha) with alpha = max(0, d1 + d2 - c1/2 - 1/2) satisfies
    both d -> d' and d' -> c.
    """
    if schmidt_rank(d, policy) < 3:
        raise PreconditionViolated("returned state must have rank at least 3")
    if schmidt_rank(c, policy) != 2:
        raise PreconditionViolated("target state must have rank exactly 2")
    if not nielsen_convertible(d, c, policy):
        raise PreconditionViolated("returned state does not reach the target")
    exact = d.exact and c.exact
    zero, half, one = _typed_consts(exact)
    c1 = c[0]
    alpha = d[0] + d[1] - c1 / 2 - half
    if alpha < zero:
        alpha = zero
    tail = (one - c1) / 2
    return SchmidtVector((c1, tail + alpha, tail - alpha))


def trivial_swap_construction(pair: CatalyticPair, c: SchmidtVector):
    """Borrow c composed with b, return c composed with a: gain exactly 1.

    The joint input a (x) (c (x) b) and joint output b (x) (c (x) a) carry the
    same coefficient multiset, so the protocol is a local register swap; the
    returned state reaches the borrowed one precisely because c is a
    catalyst.
    """
    if not is_catalyst(pair, c):
        raise NotACatalyst("the auxiliary state is not a catalyst for this pair")
    borrowed = kron(c, pair.b)
    returned = kron(c, pair.a)
    return borrowed, returned


@dataclass(frozen=True)
class EpsilonFamily:
    """Four-vector family tracing supercatalytic gain arbitrarily close to 1."""

    eps: Real
    a: SchmidtVector
    b: SchmidtVector
    c: SchmidtVector
    d: SchmidtVector


@dataclass(frozen=True)
class EpsilonFamilyReport:
    """Verifier output for one family member."""

    eps: float
    base_blocked: bool
    f2_strictly_greater: bool
    joint_feasible: bool
    returned_reaches_borrowed: bool
    states_differ: bool
    gain: float
    x_min: float
    x_max: float
    predicted_x_min: float
    predicted_x_max: float

    @property
    def ok(self) -> bool:
        return (self.base_blocked and self.f2_strictly_greater and self.joint_feasible
                and self.returned_reaches_borrowed and self.states_differ)

    def to_json_value(self) -> dict:
        out = {k: getattr(self, k) for k in ("eps", "base_blocked", "f2_strictly_greater",
                                             "joint_feasible", "returned_reaches_borrowed",
                                             "states_differ", "gain", "x_min", "x_max",
                                             "predicted_x_min", "predicted_x_max")}
        out["ok"] = self.ok
        return out


def _exact_sqrt(x: Fraction) -> Fraction:
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise InvalidEpsilon(f"sqrt({x}) is irrational; use float mode for this epsilon")
    return Fraction(rn, rd)


def epsilon_family(eps: Real, policy: ComparisonPolicy = FLOAT_POLICY) -> EpsilonFamily:
    """Construct the near-maximal-gain family at parameter eps > 0.

    The main pair keeps one half-weight level while eps controls how close
    the output state is to separable; the borrowed state is the least
    entangled two-level catalyst and the returned state approaches maximal
    entanglement at rate sqrt(eps).  Validity of all four vectors is checked,
    not assumed: for eps too large some vector leaves the ordered simplex.
    """
    if policy.exact:
        e = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
        one, half = Fraction(1), Fraction(1, 2)
    else:
        e = float(eps)
        one, half = 1.0, 0.5
    if e <= 0:
        raise InvalidEpsilon("epsilon must be positive")
    root = _exact_sqrt(e) if policy.exact else math.sqrt(e)

    raw = {
        "a": (half, half - e, e / 2, e / 2),
        "b": (one - 2 * e - e * e, e + e * e / 2, e - e * e / 2, e * e),
        "c": ((one - 2 * e - e * e) / (one - e), (e + e * e) / (one - e)),
        "d": (half + root, half - root),
    }
    for name, entries in raw.items():
        if not _ordered_descending(entries):
            raise InvalidEpsilon(f"vector {name} leaves the ordered simplex at eps={float(e)}")
    vecs = {name: make_schmidt(entries, policy) for name, entries in raw.items()}
    return EpsilonFamily(e, vecs["a"], vecs["b"], vecs["c"], vecs["d"])


def verify_epsilon_family(family: EpsilonFamily,
                          policy: ComparisonPolicy = FLOAT_POLICY) -> EpsilonFamilyReport:
    """Check every supercatalysis condition for a family member and report."""
    a, b, c, d = family.a, family.b, family.c, family.d
    pair = CatalyticPair(a, b, policy)
    fa, fb = prefix_sums(a), prefix_sums(b)
    verdict = check_supercatalytic(a, b, c, d, policy)
    g = gain(a, b, c, d, policy) if verdict.ok else 0.0
    interval = rank2_catalyst_interval(pair)
    e = family.eps
    return EpsilonFamilyReport(
        eps=float(e),
        base_blocked=verdict.base_blocked,
        f2_strictly_greater=policy.strictly_greater(fa[1], fb[1]),
        joint_feasible=verdict.joint_feasible,
        returned_reaches_borrowed=verdict.returned_reaches_borrowed,
        states_differ=verdict.states_differ,
        gain=g,
        x_min=float(interval.x_min),
        x_max=float(interval.x_max),
        predicted_x_min=float((1 + e) / 2),
        predicted_x_max=float((1 - 2 * e - e * e) / (1 - e)),
    )
