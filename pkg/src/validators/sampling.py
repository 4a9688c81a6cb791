"""
Random sampling for the property suites
QWEYL_SEED fixes the generator so runs are reproducible
"""

import logging
import os
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebras.presentations import (NormalElement, NormalMonomial, PBWMonomial, PresentationId, Vector)
from core.characters import Character, Generic, Integral
from core.scalars import ParamContext, Scalar
from modules.weight_module import ModuleSpec, WeightVector, in_nphi, ModuleKind

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240229


def get_rng(seed: Optional[int] = None) -> random.Random:
    """Random generator seeded from the argument, QWEYL_SEED, or a fixed default"""
    if seed is None:
        env_seed = os.getenv('QWEYL_SEED')
        if env_seed:
            try:
                seed = int(env_seed)
            except ValueError:
                logger.warning(f"Ignoring non-integer QWEYL_SEED={env_seed!r}")
    if seed is None:
        seed = DEFAULT_SEED
    logger.debug(f"Sampling with seed {seed}")
    return random.Random(seed)


def random_scalar(ctx: ParamContext, rng: random.Random, max_coeff: int = 3) -> Scalar:
    """Small nonzero integer times a random q-monomial"""
    coeff = 0
    while coeff == 0:
        coeff = rng.randint(-max_coeff, max_coeff)
    value = ctx.scalar(coeff)
    i = rng.randint(1, ctx.n)
    return value * ctx.q(i) ** rng.randint(-1, 2)


def _split_degree(rng: random.Random, slots: int, total: int) -> List[int]:
    counts = [0] * slots
    for _ in range(total):
        counts[rng.randrange(slots)] += 1
    return counts


def random_monomial(p: PresentationId, rng: random.Random, max_degree: int = 3):
    n = p.n
    degree = rng.randint(0, max_degree)
    if not p.localized:
        counts = _split_degree(rng, 2 * n, degree)
        return PBWMonomial(tuple(counts[:n]), tuple(counts[n:]))
    counts = _split_degree(rng, 2 * n, degree)
    k = tuple(counts[s] * rng.choice((1, -1)) for s in range(n))
    m = tuple(counts[n + s] * rng.choice((1, -1)) for s in range(n))
    return NormalMonomial(k, m)


def random_element(p: PresentationId, rng: random.Random, max_terms: int = 2,
                   max_degree: int = 3) -> NormalElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(p, rng, max_degree)] = p.ctx.scalar(rng.choice((-2, -1, 1, 2, 3)))
    return NormalElement(p, terms)


def random_character(n: int, rng: random.Random, generic_symbols: int = 2,
                     alpha_range: int = 3) -> Character:
    coords = []
    for _ in range(n):
        alpha = rng.randint(-alpha_range, alpha_range)
        if generic_symbols and rng.random() < 0.5:
            coords.append(Generic(rng.randint(1, generic_symbols), alpha))
        else:
            coords.append(Integral(alpha))
    return Character(tuple(coords))


def random_vector(spec: ModuleSpec, rng: random.Random, radius: int, max_terms: int = 3) -> WeightVector:
    """Random vector supported in [-radius, radius]^n (and off N_phi for S)"""
    entries = {}
    attempts = 0
    while len(entries) < max_terms and attempts < 50 * max_terms:
        attempts += 1
        k = tuple(rng.randint(-radius, radius) for _ in range(spec.n))
        if spec.kind is ModuleKind.S and in_nphi(spec, k):
            continue
        entries[k] = spec.ctx.scalar(rng.choice((-2, -1, 1, 2, 3)))
    return WeightVector(spec, entries)


def random_shift(n: int, rng: random.Random, bound: int = 3) -> Vector:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def random_lambda_vector(n: int, rng: random.Random) -> Dict[Tuple[int, int], Fraction]:
    """Nonzero rationals for the upper-triangular skew entries (numeric mode)"""
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(i, j)] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3, 5)), rng.choice((1, 2, 3)))
    return entries
