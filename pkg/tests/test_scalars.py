"""
Scalar field tests
"""

from fractions import Fraction

import pytest

from core.errors import ConfigurationError, DivisionByZero, ZeroScalar
from core.scalars import (LambdaMode, ParamContext, as_q_power, format_scalar, is_single_term, lambda_symbol_name,
                          quantum_integer, scalar_arith, scalars_equal)
from utils.parser import parse_scalar


def test_contexts_of_same_rank_share_a_field(ctx2, ones2):
    assert ctx2.field is ones2.field
    assert scalars_equal(ctx2.q(1), ones2.q(1))


def test_lambda_entries_by_mode():
    symbolic = ParamContext(2)
    ones = ParamContext(2, LambdaMode.ALL_ONES)
    numeric = ParamContext(2, LambdaMode.NUMERIC, (((1, 2), Fraction(2)),))

    assert scalars_equal(symbolic.lam(2, 1) * symbolic.lam(1, 2), symbolic.one)
    assert scalars_equal(ones.lam(1, 2), ones.one)
    assert scalars_equal(ones.lam_symbol(1, 2), symbolic.lam(1, 2))
    assert scalars_equal(numeric.lam(1, 2), numeric.scalar(2))
    assert scalars_equal(numeric.lam(2, 1), numeric.scalar(Fraction(1, 2)))
    assert scalars_equal(symbolic.lam(1, 1), symbolic.one)


def test_numeric_lambdas_default_to_one_and_reject_zero():
    ctx = ParamContext(3, LambdaMode.NUMERIC, (((1, 3), Fraction(-1, 3)),))
    assert scalars_equal(ctx.lam(1, 2), ctx.one)
    assert scalars_equal(ctx.lam(1, 3), ctx.scalar(Fraction(-1, 3)))
    with pytest.raises(ConfigurationError):
        ParamContext(2, LambdaMode.NUMERIC, (((1, 2), Fraction(0)),))
    with pytest.raises(ConfigurationError):
        ParamContext(2, LambdaMode.SYMBOLIC, (((1, 2), Fraction(2)),))


def test_invalid_contexts():
    with pytest.raises(ConfigurationError):
        ParamContext(0)
    with pytest.raises(ConfigurationError):
        ParamContext(1).q(2)
    with pytest.raises(ConfigurationError):
        ParamContext(1, generic_symbols=1).c(2)


def test_lambda_symbol_names():
    assert lambda_symbol_name(1, 2, 3) == 'l12'
    assert lambda_symbol_name(1, 2, 10) == 'l1_2'


def test_arith_and_division_by_zero(ctx1):
    q = ctx1.q(1)
    assert scalars_equal(scalar_arith(q, q, 'mul'), q ** 2)
    assert scalars_equal(scalar_arith(q ** 2 - 1, q - 1, 'div'), q + 1)
    with pytest.raises(DivisionByZero):
        scalar_arith(q, ctx1.zero, 'div')


def test_quantum_integers(ctx1):
    q = ctx1.q(1)
    assert scalars_equal(quantum_integer(ctx1, 0, 1), ctx1.zero)
    assert scalars_equal(quantum_integer(ctx1, 3, 1), 1 + q + q ** 2)
    assert scalars_equal(quantum_integer(ctx1, -2, 1), -(q ** -2) * (1 + q))
    assert scalars_equal(quantum_integer(ctx1, 4, 1) * (q - 1), q ** 4 - 1)


def test_as_q_power(ctx2):
    assert as_q_power(ctx2, ctx2.q(1) ** 3, 1) == 3
    assert as_q_power(ctx2, ctx2.q(2) ** -2, 2) == -2
    assert as_q_power(ctx2, ctx2.one, 1) == 0
    assert as_q_power(ctx2, 2 * ctx2.q(1), 1) is None
    assert as_q_power(ctx2, ctx2.q(1), 2) is None
    with pytest.raises(ZeroScalar):
        as_q_power(ctx2, ctx2.zero, 1)


def test_format_scalar(ctx2):
    q1 = ctx2.q(1)
    assert format_scalar(ctx2.zero) == '0'
    assert format_scalar(-q1) == '-q1'
    assert format_scalar(3 * q1 ** 2 / ctx2.lam(1, 2)) == '3*q1^2*l12^-1'
    assert format_scalar(ctx2.scalar(Fraction(2, 3)) * q1) == '2/3*q1'
    assert format_scalar((q1 - 1) / (q1 + 1)) == '(q1 - 1) / (q1 + 1)'
    assert is_single_term(q1 ** -2)
    assert not is_single_term(q1 - 1)


@pytest.mark.parametrize('text', ['q1^2 - 3*l12 + 1', '(q1 - 1) / (q2 + c1)', '-2/5*q1^-1*c2', '7'])
def test_parse_then_format_is_stable(ctx2, text):
    value = parse_scalar(ctx2, text)
    assert scalars_equal(parse_scalar(ctx2, format_scalar(value)), value)
