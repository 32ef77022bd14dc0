"""Realize a candidate rank matrix by a dual generator; hunt collisions.

The realizer fixes the linear form to the first variable and writes the
generator in layers

    F = X1^d*G_0 + X1^(d-1)*G_1 + ... + G_d,

with G_i of degree i in the remaining variables.  The k-th derivative
along x1 only involves layers G_0..G_(d-k), so the target's k-th diagonal
constrains exactly one new layer; the search walks k from d down to 0,
trying candidate layers from a small template space and backtracking on
exhaustion.  Every hit is re-verified through the full pipeline before it
is reported.

A collision is a pair of (generator, form) inputs with equal Hilbert
function and equal Jordan type but distinct Jordan degree types.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .apolar import hilbert
from .checks import CheckReport, check_rank_matrix
from .errors import DomainError, InternalInconsistencyError
from .jordan import (
    jordan_degree_type_from_rank_matrix,
    jordan_type_from_rank_matrix,
    rank_matrix,
)
from .multipoly import LinearForm, Polynomial, monomials_of_degree
from .structures import IndexedPartition, Partition, RankMatrix

SHAPE_NAMES = ("zero", "monomial", "linear_power", "pair_sum")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the layer search; identical configs give identical runs."""

    coefficient_pool: tuple[int, ...] = (-2, -1, 0, 1, 2)
    max_trials_per_layer: int = 20_000
    candidate_shapes: tuple[str, ...] = SHAPE_NAMES
    rng_seed: int = 0
    time_budget: float = 120.0

    def __post_init__(self):
        if not self.coefficient_pool or all(c == 0 for c in self.coefficient_pool):
            raise DomainError("coefficient pool needs a nonzero value")
        if self.max_trials_per_layer <= 0 or self.time_budget <= 0:
            raise DomainError("budgets must be positive")
        unknown = set(self.candidate_shapes) - set(SHAPE_NAMES)
        if unknown:
            raise DomainError(f"unknown candidate shapes: {sorted(unknown)}")


@dataclass(frozen=True)
class RealizeResult:
    outcome: Literal["found", "exhausted", "invalid_target"]
    generator: Polynomial | None = None
    check_report: CheckReport | None = None
    trials: int = 0
    deepest_layer: int = 0


@dataclass(frozen=True)
class Collision:
    first: int
    second: int
    hilbert: tuple[int, ...]
    jordan_type: Partition
    first_strings: IndexedPartition
    second_strings: IndexedPartition


def _nonzero_order(pool: Sequence[int]) -> list[int]:
    # small magnitudes first, positive before negative
    return sorted({c for c in pool if c != 0}, key=lambda c: (abs(c), c < 0))


def _vector_order(pool: Sequence[int]) -> list[int]:
    return _nonzero_order(pool) + ([0] if 0 in pool else [])


def _embed(exps: tuple[int, ...]) -> tuple[int, ...]:
    # layers avoid x1; prepend a zero exponent for it
    return (0, *exps)


def _layer_candidates(
    degree: int, nvars: int, cfg: SearchConfig, rng: random.Random
) -> Iterator[Polynomial]:
    """Candidate layers of the given degree in the variables after x1.

    Deterministic template enumeration first (zero, scaled monomials,
    scaled powers of linear forms, sums of two such pieces), then random
    coefficient vectors from the pool; the caller bounds how far this is
    consumed.
    """
    rest = nvars - 1
    coeffs = _nonzero_order(cfg.coefficient_pool)
    shapes = cfg.candidate_shapes

    if "zero" in shapes:
        yield Polynomial.zero(nvars)
    if rest == 0:
        if degree == 0:
            for c in coeffs:
                yield Polynomial.constant(nvars, c)
        return

    monomials = [_embed(e) for e in monomials_of_degree(rest, degree)]
    pieces: list[Polynomial] = []

    if "monomial" in shapes:
        for exps in monomials:
            for c in coeffs:
                cand = Polynomial.monomial(exps, c)
                pieces.append(cand)
                yield cand

    if "linear_power" in shapes and degree >= 1:
        vector_pool = _vector_order(cfg.coefficient_pool)
        for vec in itertools.product(vector_pool, repeat=rest):
            if all(v == 0 for v in vec):
                continue
            base = Polynomial(nvars, {_embed(e): v for e, v in zip(_unit_exps(rest), vec)})
            power = base ** degree
            for c in coeffs:
                cand = power.scale(c)
                pieces.append(cand)
                yield cand

    if "pair_sum" in shapes:
        for first, second in itertools.combinations(pieces, 2):
            yield first + second

    # randomized tail: dense coefficient vectors drawn from the pool
    pool = list(cfg.coefficient_pool)
    while True:
        terms = {e: rng.choice(pool) for e in monomials}
        cand = Polynomial(nvars, terms)
        if not cand.is_zero():
            yield cand


def _unit_exps(rest: int) -> list[tuple[int, ...]]:
    return [tuple(1 if j == i else 0 for j in range(rest)) for i in range(rest)]


def _partial_derivative_along_x1(layers: Sequence[Polynomial], d: int, k: int, nvars: int) -> Polynomial:
    """The k-th derivative along x1 of sum_i X1^(d-i)*G_i for the layers chosen so far."""
    result = Polynomial.zero(nvars)
    for i, layer in enumerate(layers):
        if layer.is_zero() or d - i - k < 0:
            continue
        x1_power = Polynomial.monomial((d - i - k, *(0,) * (nvars - 1)))
        result = result + (x1_power * layer).scale(math.perm(d - i, k))
    return result


class _Budget:
    def __init__(self, cfg: SearchConfig):
        self.deadline = time.monotonic() + cfg.time_budget
        self.trials = 0

    def out_of_time(self) -> bool:
        return time.monotonic() > self.deadline


def realize(target: RankMatrix, nvars: int, cfg: SearchConfig | None = None) -> RealizeResult:
    """Search for a generator whose rank matrix along x1 equals the target.

    Returns ``invalid_target`` (with the failing report) when the target
    does not pass the structural checks, ``found`` with a fully verified
    generator, or ``exhausted`` with the deepest layer reached.  Failure to
    find is not a proof that the target is unrealizable.
    """
    if nvars < 1:
        raise DomainError("need at least one variable")
    cfg = cfg or SearchConfig()
    report = check_rank_matrix(target)
    if not report.passed:
        return RealizeResult("invalid_target", check_report=report)

    d = target.d
    rng = random.Random(cfg.rng_seed)
    budget = _Budget(cfg)
    layers: list[Polynomial] = []
    deepest = 0

    def dfs(g: int) -> Polynomial | None:
        nonlocal deepest
        deepest = max(deepest, g)
        if g > d:
            return _assemble(layers, d, nvars)
        k = d - g
        want = target.diagonal(k)
        want_zero = all(v == 0 for v in want)
        tried = 0
        for cand in _layer_candidates(g, nvars, cfg, rng):
            if budget.out_of_time():
                return None
            tried += 1
            if tried > cfg.max_trials_per_layer:
                return None
            budget.trials += 1
            derivative = _partial_derivative_along_x1([*layers, cand], d, k, nvars)
            if derivative.is_zero():
                if not want_zero:
                    continue
            elif want_zero or hilbert(derivative) != want:
                continue
            layers.append(cand)
            result = dfs(g + 1)
            layers.pop()
            if result is not None:
                return result
            if budget.out_of_time():
                return None
        return None

    found = dfs(0)
    if found is None:
        return RealizeResult("exhausted", trials=budget.trials, deepest_layer=deepest)

    verified = rank_matrix(found, LinearForm.unit(nvars, 0))
    if verified != target:
        raise InternalInconsistencyError("search hit did not survive pipeline verification")
    return RealizeResult("found", generator=found, trials=budget.trials, deepest_layer=deepest)


def _assemble(layers: Sequence[Polynomial], d: int, nvars: int) -> Polynomial:
    result = Polynomial.zero(nvars)
    for i, layer in enumerate(layers):
        if layer.is_zero():
            continue
        x1_power = Polynomial.monomial((d - i, *(0,) * (nvars - 1)))
        result = result + x1_power * layer
    return result


def find_collisions(pool: Sequence[tuple[Polynomial, LinearForm]]) -> list[Collision]:
    """All pairs with equal Hilbert function and Jordan type but distinct strings."""
    computed = []
    for f, ell in pool:
        m = rank_matrix(f, ell)
        computed.append(
            (m.diagonal(0), jordan_type_from_rank_matrix(m), jordan_degree_type_from_rank_matrix(m))
        )
    groups: dict[tuple, list[int]] = {}
    for idx, (h, p, _) in enumerate(computed):
        groups.setdefault((h, p.parts), []).append(idx)
    collisions = []
    for (h, parts), members in sorted(groups.items()):
        for a, b in itertools.combinations(members, 2):
            sa, sb = computed[a][2], computed[b][2]
            if sa != sb:
                collisions.append(Collision(a, b, h, Partition(parts), sa, sb))
    return sorted(collisions, key=lambda c: (c.first, c.second))
