"""
Rewrite engine tests for the four presentations
"""

import pytest

from algebras.presentations import (Family, NormalElement, NormalMonomial, PBWMonomial, PresentationId,
                                    check_relations, defining_identities, generator, multiply, z_element)
from core.errors import PresentationMismatch
from core.scalars import LambdaMode, ParamContext, scalars_equal
from validators.algebra_checks import (ALL_PRESENTATIONS, associativity_check, basis_action_check,
                                       relations_suite, run_algebra_suites, strongly_free_check)
from validators.sampling import random_lambda_vector


def x(p, i):
    return generator(p, ('x', i, 1))


def y(p, i):
    return generator(p, ('y', i, 1))


def z(p, i, power=1):
    return generator(p, ('z', i, power))


def test_unit_relation_in_aj_a(aj_a1):
    q = aj_a1.ctx.q(1)
    product = multiply(x(aj_a1, 1), y(aj_a1, 1))
    expected = NormalElement(aj_a1, {PBWMonomial((1,), (1,)): q, PBWMonomial((0,), (0,)): aj_a1.ctx.one})
    assert product == expected
    assert str(product) == '1 + q1*y1*x1'
    assert (product - y(aj_a1, 1) * x(aj_a1, 1) * q - 1).is_zero()


def test_z_inverse_times_x_in_maltsiniotis_b(malt_b2):
    product = multiply(z(malt_b2, 1, -1), x(malt_b2, 2))
    assert product == NormalElement.monomial(malt_b2, NormalMonomial((0, 1), (-1, 0)))


def test_z_closed_forms(ctx2):
    aj = PresentationId(Family.AJ, False, ctx2)
    malt = PresentationId(Family.MALTSINIOTIS, False, ctx2)
    for p in (aj, malt):
        for i in (1, 2):
            commutator = x(p, i) * y(p, i) - y(p, i) * x(p, i)
            assert commutator == z_element(p, i)
    # the Maltsiniotis z_2 involves both axes
    assert len(z_element(malt, 2).terms) == 3
    assert len(z_element(aj, 2).terms) == 2


@pytest.mark.parametrize('family, localized', ALL_PRESENTATIONS)
@pytest.mark.parametrize('n', [1, 2])
def test_relations_hold(family, localized, n):
    report = check_relations(PresentationId(family, localized, ParamContext(n)))
    assert report.passed, [entry.identity for entry in report.failures]
    assert report.summary()['total'] == len(defining_identities(PresentationId(family, localized, ParamContext(n))))


@pytest.mark.slow
@pytest.mark.parametrize('family, localized', ALL_PRESENTATIONS)
@pytest.mark.parametrize('n', [3, 4])
def test_relations_hold_in_higher_rank(family, localized, n):
    assert check_relations(PresentationId(family, localized, ParamContext(n))).passed


def test_relations_hold_for_numeric_and_trivial_matrices():
    numeric = ParamContext(2, LambdaMode.NUMERIC, (((1, 2), 3),))
    for ctx in (numeric, ParamContext(2, LambdaMode.ALL_ONES)):
        for family, localized in ALL_PRESENTATIONS:
            assert check_relations(PresentationId(family, localized, ctx)).passed


def test_perturbed_relation_fails(aj_b2):
    report = check_relations(aj_b2, perturb=True)
    assert not report.passed
    assert any('x1*y1' in entry.identity for entry in report.failures)


def test_aj_skew_relations_hold_in_both_orders(aj_b2):
    lam = aj_b2.ctx.lam(1, 2)
    assert x(aj_b2, 2) * x(aj_b2, 1) == (x(aj_b2, 1) * x(aj_b2, 2)).scale(aj_b2.ctx.one / lam)
    assert x(aj_b2, 1) * x(aj_b2, 2) == (x(aj_b2, 2) * x(aj_b2, 1)).scale(lam)


def test_generator_preconditions(ctx2):
    a = PresentationId(Family.AJ, False, ctx2)
    b = PresentationId(Family.AJ, True, ctx2)
    with pytest.raises(PresentationMismatch):
        z(a, 1, -1)
    with pytest.raises(PresentationMismatch):
        generator(b, ('x', 1, -1))
    with pytest.raises(PresentationMismatch):
        x(b, 3)
    with pytest.raises(PresentationMismatch):
        multiply(x(a, 1), x(b, 1))
    with pytest.raises(PresentationMismatch):
        NormalElement.monomial(a, NormalMonomial((0, 0), (0, 0)))


def test_degrees_and_components(aj_b2):
    element = x(aj_b2, 1) * y(aj_b2, 2) + z(aj_b2, 1) + x(aj_b2, 1) * y(aj_b2, 1)
    components = element.homogeneous_components()
    assert set(components) == {(1, -1), (0, 0)}
    # z1 and the z1 term of x1*y1 share a monomial
    assert len(components[(0, 0)].terms) == 2


def test_scalars_commute_with_elements(aj_b2):
    q = aj_b2.ctx.q(2)
    element = x(aj_b2, 1) + y(aj_b2, 2)
    assert q * element == element * q == element.scale(q)
    assert (element * aj_b2.ctx.zero).is_zero()
    assert scalars_equal(element.coefficient(NormalMonomial((1, 0), (0, 0))), aj_b2.ctx.one)


@pytest.mark.parametrize('family, localized', ALL_PRESENTATIONS)
def test_associativity_on_random_triples(family, localized, rng):
    p = PresentationId(family, localized, ParamContext(2))
    assert associativity_check(p, samples=10, max_degree=2, rng=rng).passed


@pytest.mark.slow
@pytest.mark.parametrize('family, localized', ALL_PRESENTATIONS)
@pytest.mark.parametrize('n', [1, 2, 3])
def test_associativity_at_scale(family, localized, n, rng):
    assert associativity_check(PresentationId(family, localized, ParamContext(n)), samples=200, rng=rng).passed


def test_basis_action_closed_forms(aj_b2):
    assert basis_action_check(aj_b2, radius=2).passed
    assert strongly_free_check(aj_b2, radius=2).passed


def test_relations_hold_for_sampled_numeric_matrices(rng):
    for _ in range(3):
        numeric = ParamContext(3, LambdaMode.NUMERIC, tuple(random_lambda_vector(3, rng).items()))
        assert check_relations(PresentationId(Family.MALTSINIOTIS, True, numeric)).passed


def test_relations_suite_covers_every_presentation(ctx2):
    report = relations_suite(ctx2)
    assert report.passed, report.failures
    assert {entry.identity.split(':')[0] for entry in report.entries} == {'AJ-A', 'AJ-B', 'Malt-A', 'Malt-B'}


def test_algebra_suites_for_one_rank(ctx1, rng):
    report = run_algebra_suites(ctx1, samples=10, rng=rng)
    assert report.passed, report.failures
    assert report.parameters['samples'] == 10
