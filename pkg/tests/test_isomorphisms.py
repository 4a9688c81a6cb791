"""
Shift isomorphisms and window comparisons
"""

import pytest

from core.characters import parse_character
from core.errors import LambdaModeMismatch
from core.scalars import LambdaMode, ParamContext, scalars_equal
from modules.comparisons import tensor_compare, twist_module_compare
from modules.isomorphisms import shift_iso_scalars
from modules.weight_module import ModuleKind


@pytest.mark.parametrize('text', ['[q^2]', '[q^-3]', '[c1]', '[c2*q^-1]'])
def test_rank_one_shift(ctx1, text):
    iso = shift_iso_scalars(ctx1, 1, parse_character(text), 4)
    assert iso.report.passed, iso.report.failures
    assert not iso.conflicts
    assert scalars_equal(iso.scalars[(0,)], ctx1.one)


def test_shift_wall_scalar(ctx1):
    q = ctx1.q(1)
    iso = shift_iso_scalars(ctx1, 1, parse_character('[q^2]'), 3)
    # mu_-1 = (q^2 - 1)/(q - 1) mu_0
    assert scalars_equal(iso.scalars[(-1,)], q + 1)
    assert scalars_equal(iso.scalars[(1,)], ctx1.one)


@pytest.mark.parametrize('axis', [1, 2])
def test_rank_two_shift(ctx2, axis):
    iso = shift_iso_scalars(ctx2, axis, parse_character('[q^-1, c1*q]'), 3)
    assert iso.report.passed, iso.report.failures


def test_degenerate_axis_is_reported(ctx2):
    iso = shift_iso_scalars(ctx2, 1, parse_character('[1, c1]'), 3)
    assert not iso.report.passed
    assert [entry.identity for entry in iso.report.failures] == ['phi(z1) != 1']
    assert 'not injective' in iso.report.failures[0].witness
    assert iso.scalars == {}
    assert shift_iso_scalars(ctx2, 2, parse_character('[1, c1]'), 3).report.passed


@pytest.mark.parametrize('kind', [ModuleKind.P, ModuleKind.S])
@pytest.mark.parametrize('text', ['[q^2, c1]', '[q^-1, q^0]'])
def test_tensor_compare(ones2, kind, text):
    report = tensor_compare(ones2, parse_character(text), 3, kind)
    assert report.passed, report.failures


def test_tensor_compare_needs_the_trivial_matrix(ctx2):
    with pytest.raises(LambdaModeMismatch):
        tensor_compare(ctx2, parse_character('[q, q]'), 2)


@pytest.mark.parametrize('kind', [ModuleKind.P, ModuleKind.S])
def test_twist_module_compare(ctx2, kind):
    report = twist_module_compare(ctx2, parse_character('[q^2, c1*q^-1]'), 3, kind)
    assert report.passed, report.failures


@pytest.mark.slow
def test_twist_module_compare_rank_three(ctx3):
    report = twist_module_compare(ctx3, parse_character('[q, q^-1, c1]'), 2, ModuleKind.S)
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize('kind', [ModuleKind.P, ModuleKind.S])
def test_tensor_compare_rank_three(kind):
    ctx = ParamContext(3, LambdaMode.ALL_ONES)
    report = tensor_compare(ctx, parse_character('[q^2, c1, q^-1]'), 4, kind)
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize('kind', [ModuleKind.P, ModuleKind.S])
@pytest.mark.parametrize('text', ['[c1, c2]', '[q, q^-2]', '[1, c1*q]', '[q^-1, q^3]'])
def test_twist_module_compare_shapes(ctx2, kind, text):
    report = twist_module_compare(ctx2, parse_character(text), 4, kind)
    assert report.passed, report.failures
