"""Shared generators and fixtures for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import settings

from supercat import (CatalyticPair, ComparisonPolicy, FLOAT_POLICY, make_schmidt,
                      necessary_conditions_4d, rank2_catalyst_interval)
from supercat.errors import PreconditionViolated

settings.register_profile("package", deadline=None, derandomize=True)
settings.load_profile("package")


def random_sorted_simplex(rng: random.Random, dim: int) -> tuple:
    cuts = sorted(rng.random() for _ in range(dim - 1))
    edges = [0.0] + cuts + [1.0]
    vals = [b - a for a, b in zip(edges, edges[1:])]
    return tuple(sorted(vals, reverse=True))


def random_rational_sorted_simplex(rng: random.Random, dim: int, denom: int = 1000) -> tuple:
    while True:
        cuts = sorted(rng.randrange(0, denom + 1) for _ in range(dim - 1))
        edges = [0] + cuts + [denom]
        vals = sorted((b - a for a, b in zip(edges, edges[1:])), reverse=True)
        if vals[0] < denom:  # avoid the separable corner
            return tuple(Fraction(v, denom) for v in vals)


def random_nontrivial_pair(rng: random.Random, policy: ComparisonPolicy = FLOAT_POLICY,
                           min_width: float = 0.0):
    """A random rank <= 4 pair with a blocked base transformation and a
    nonempty two-level catalyst interval of at least the given width."""
    while True:
        if policy.exact:
            raw_a = random_rational_sorted_simplex(rng, 4)
            raw_b = random_rational_sorted_simplex(rng, 4)
        else:
            raw_a = random_sorted_simplex(rng, 4)
            raw_b = random_sorted_simplex(rng, 4)
        pair = CatalyticPair(make_schmidt(raw_a, policy), make_schmidt(raw_b, policy), policy)
        if not pair.nontrivial:
            continue
        try:
            if not necessary_conditions_4d(pair):
                continue
        except PreconditionViolated:
            continue
        interval = rank2_catalyst_interval(pair)
        if not interval.nonempty or interval.width < min_width:
            continue
        return pair


def random_blocked_pair_with_empty_interval(rng: random.Random,
                                            policy: ComparisonPolicy = FLOAT_POLICY):
    """A blocked pair passing the necessary conditions whose closed-form
    two-level interval is nevertheless empty."""
    while True:
        if policy.exact:
            raw_a = random_rational_sorted_simplex(rng, 4)
            raw_b = random_rational_sorted_simplex(rng, 4)
        else:
            raw_a = random_sorted_simplex(rng, 4)
            raw_b = random_sorted_simplex(rng, 4)
        pair = CatalyticPair(make_schmidt(raw_a, policy), make_schmidt(raw_b, policy), policy)
        if not pair.nontrivial:
            continue
        try:
            if not necessary_conditions_4d(pair):
                continue
        except PreconditionViolated:
            continue
        if not rank2_catalyst_interval(pair).nonempty:
            return pair


@pytest.fixture
def rng():
    return random.Random(20240817)
