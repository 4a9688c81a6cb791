"""
Twisting and theta tests
"""

import pytest

from algebras.presentations import Family, NormalElement, NormalMonomial, PresentationId, generator, multiply
from algebras.theta import theta, theta_target
from algebras.twisting import tau_apply, twist_product, twist_scalar, untwisted_presentation
from core.errors import ModeMismatch, PresentationMismatch
from core.scalars import ParamContext, scalars_equal
from validators.algebra_checks import theta_check, twist_check
from validators.sampling import random_element


def test_twist_scalar(ctx2):
    lam = ctx2.lam(1, 2)
    assert scalars_equal(twist_scalar(ctx2, (1, 0), (0, 1)), ctx2.one / lam)
    assert scalars_equal(twist_scalar(ctx2, (2, 0), (0, -1)), lam ** 2)
    # tau_2 fixes everything in rank two
    assert scalars_equal(twist_scalar(ctx2, (0, 5), (3, 3)), ctx2.one)


def test_twisted_product_recovers_the_skew_relation(ctx2):
    ones = untwisted_presentation(PresentationId(Family.AJ, True, ctx2))
    x1, x2 = generator(ones, ('x', 1, 1)), generator(ones, ('x', 2, 1))
    assert twist_product(x1, x2, ctx2) == multiply(x1, x2)
    assert twist_product(x2, x1, ctx2) == multiply(x1, x2).scale(ctx2.one / ctx2.lam(1, 2))


def test_tau_requires_the_trivial_matrix(aj_b2, ctx2):
    with pytest.raises(ModeMismatch):
        tau_apply((1, 0), generator(aj_b2, ('x', 2, 1)), ctx2)
    malt = untwisted_presentation(PresentationId(Family.MALTSINIOTIS, True, ctx2))
    with pytest.raises(ModeMismatch):
        tau_apply((1, 0), NormalElement.one(malt), ctx2)


def test_tau_is_diagonal(ctx2):
    ones = untwisted_presentation(PresentationId(Family.AJ, True, ctx2))
    y2 = generator(ones, ('y', 2, 1))
    assert tau_apply((1, 0), y2, ctx2) == y2.scale(ctx2.lam(1, 2))
    assert tau_apply((0, 0), y2, ctx2) == y2


def test_twist_check_passes(ctx2, rng):
    report = twist_check(ctx2, samples=5, rng=rng)
    assert report.passed, [entry.identity for entry in report.failures]


@pytest.mark.slow
def test_twist_check_in_rank_three(ctx3, rng):
    assert twist_check(ctx3, samples=50, rng=rng).passed


def test_theta_on_generators(aj_b2, malt_b2):
    assert theta_target(aj_b2) == malt_b2
    image = theta(generator(aj_b2, ('x', 2, 1)))
    assert image == NormalElement.monomial(malt_b2, NormalMonomial((0, 1), (-1, 0)))
    assert theta(generator(aj_b2, ('z', 2, 1))) == NormalElement.monomial(malt_b2, NormalMonomial((0, 0), (-1, 1)))
    assert theta(generator(aj_b2, ('y', 1, 1))) == generator(malt_b2, ('y', 1, 1))


def test_theta_is_multiplicative(aj_b2):
    a = generator(aj_b2, ('x', 2, 1)) + generator(aj_b2, ('y', 1, 1))
    b = generator(aj_b2, ('y', 2, 1)) * generator(aj_b2, ('z', 1, -1))
    assert theta(multiply(a, b)) == multiply(theta(a), theta(b))


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3])
def test_theta_is_multiplicative_on_random_pairs(rng, n):
    source = PresentationId(Family.AJ, True, ParamContext(n))
    for _ in range(25):
        a, b = random_element(source, rng), random_element(source, rng)
        assert theta(multiply(a, b)) == multiply(theta(a), theta(b))


def test_theta_domain(ctx2):
    with pytest.raises(PresentationMismatch):
        theta(NormalElement.one(PresentationId(Family.AJ, False, ctx2)))


@pytest.mark.parametrize('n', [1, 2])
def test_theta_check(n):
    report = theta_check(ParamContext(n))
    assert report.passed, [entry.identity for entry in report.failures]


@pytest.mark.slow
def test_theta_check_in_rank_three(ctx3):
    assert theta_check(ctx3).passed
