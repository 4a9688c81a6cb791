"""
Exact Scalar Arithmetic
Coefficient field Q(q_i, l_ij, c_t) shared by every algebra, module and operator

The deformation parameters q_i are independent indeterminates, which is how
genericity of the parameters is modelled. Skew-symmetric matrix entries are
stored only above the diagonal; generic character values use the symbols c_t.
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import QQ, Symbol
from sympy.polys.fields import FracElement, FracField
from typing_extensions import Literal, TypeAlias

from core.errors import ConfigurationError, DivisionByZero, ZeroScalar

logger = logging.getLogger(__name__)

Scalar: TypeAlias = FracElement
ArithOp = Literal['add', 'sub', 'mul', 'div']
ScalarLike = Union[int, Fraction, FracElement]


class LambdaMode(Enum):
    """How the skew-symmetric matrix entries are supplied"""
    ALL_ONES = 'ones'
    SYMBOLIC = 'symbolic'
    NUMERIC = 'numeric'


def lambda_symbol_name(i: int, j: int, n: int) -> str:
    """Symbol name of l_ij; an underscore separates indices once they reach two digits"""
    if n >= 10:
        return f"l{i}_{j}"
    return f"l{i}{j}"


@lru_cache(maxsize=None)
def _build_field(n: int, generic_symbols: int) -> FracField:
    names = [f"q{i}" for i in range(1, n + 1)]
    names += [lambda_symbol_name(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    names += [f"c{t}" for t in range(1, generic_symbols + 1)]
    logger.debug(f"Building coefficient field with {len(names)} symbols: {', '.join(names)}")
    return FracField(tuple(Symbol(name) for name in names), QQ)


@dataclass(frozen=True)
class ParamContext:
    """
    Rank, skew-symmetric matrix mode and generic symbol count

    Contexts with the same rank and symbol count share one coefficient field,
    so scalars produced under different lambda modes can be compared directly.
    """
    n: int
    lambda_mode: LambdaMode = LambdaMode.SYMBOLIC
    numeric_lambdas: Tuple[Tuple[Tuple[int, int], Fraction], ...] = dataclass_field(default=())
    generic_symbols: int = 2

    def __post_init__(self):
        if self.n < 1:
            raise ConfigurationError(f"Rank must be at least 1, got {self.n}")
        if self.generic_symbols < 0:
            raise ConfigurationError(f"Generic symbol count must be non-negative, got {self.generic_symbols}")

        if self.lambda_mode is LambdaMode.NUMERIC:
            table = dict(self.numeric_lambdas)
            normalized = []
            for i in range(1, self.n + 1):
                for j in range(i + 1, self.n + 1):
                    value = Fraction(table.pop((i, j), 1))
                    if value == 0:
                        raise ConfigurationError(f"Numeric l{i}{j} must be nonzero")
                    normalized.append(((i, j), value))
            if table:
                raise ConfigurationError(
                    f"Numeric lambda table has entries outside i<j<= {self.n}: {sorted(table)}"
                )
            object.__setattr__(self, 'numeric_lambdas', tuple(normalized))
        elif self.numeric_lambdas:
            raise ConfigurationError("Numeric lambda values given but lambda mode is not numeric")

    @property
    def field(self) -> FracField:
        return _build_field(self.n, self.generic_symbols)

    @property
    def one(self) -> Scalar:
        return self.field.one

    @property
    def zero(self) -> Scalar:
        return self.field.zero

    def _gen(self, name: str) -> Scalar:
        field = self.field
        for symbol, gen in zip(field.symbols, field.gens):
            if str(symbol) == name:
                return gen
        raise ConfigurationError(f"Unknown symbol {name}")

    def _check_axis(self, i: int):
        if not 1 <= i <= self.n:
            raise ConfigurationError(f"Axis {i} outside 1..{self.n}")

    def q(self, i: int) -> Scalar:
        self._check_axis(i)
        return self.field.gens[i - 1]

    def lam_symbol(self, i: int, j: int) -> Scalar:
        """The indeterminate l_ij (i<j), present whatever the lambda mode"""
        self._check_axis(i)
        self._check_axis(j)
        if not i < j:
            raise ConfigurationError(f"Lambda symbols are stored for i<j only, got ({i}, {j})")
        return self._gen(lambda_symbol_name(i, j, self.n))

    def lam(self, i: int, j: int) -> Scalar:
        """Entry (i, j) of the skew-symmetric matrix; 1 on the diagonal, inverse below it"""
        self._check_axis(i)
        self._check_axis(j)
        if i == j or self.lambda_mode is LambdaMode.ALL_ONES:
            return self.one
        if i > j:
            return self.one / self.lam(j, i)
        if self.lambda_mode is LambdaMode.SYMBOLIC:
            return self.lam_symbol(i, j)
        return self.scalar(dict(self.numeric_lambdas)[(i, j)])

    def c(self, t: int) -> Scalar:
        if not 1 <= t <= self.generic_symbols:
            raise ConfigurationError(
                f"Generic symbol c{t} not declared (context has {self.generic_symbols})"
            )
        return self._gen(f"c{t}")

    def scalar(self, value: ScalarLike) -> Scalar:
        """Coerce an integer, Fraction or field element into the field"""
        if isinstance(value, FracElement):
            return value
        if isinstance(value, Fraction):
            return self.field.ground_new(QQ(value.numerator, value.denominator))
        if isinstance(value, int):
            return self.field.ground_new(QQ(value))
        raise TypeError(f"Cannot coerce {type(value).__name__} to a scalar")

    def with_lambda_mode(self, mode: LambdaMode,
                         numeric: Iterable[Tuple[Tuple[int, int], Fraction]] = ()) -> 'ParamContext':
        return ParamContext(self.n, mode, tuple(numeric), self.generic_symbols)

    def describe(self) -> Dict[str, object]:
        info: Dict[str, object] = {
            'n': self.n,
            'lambda_mode': self.lambda_mode.value,
            'generic_symbols': self.generic_symbols,
        }
        if self.lambda_mode is LambdaMode.NUMERIC:
            info['lambdas'] = {f"{i}{j}": str(v) for (i, j), v in self.numeric_lambdas}
        return info


def scalar_arith(a: Scalar, b: Scalar, op: ArithOp) -> Scalar:
    """
    Exact field arithmetic

    Raises:
        DivisionByZero: when dividing by the zero scalar
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        if not b:
            raise DivisionByZero("Division by the zero scalar")
        return a / b
    raise ValueError(f"Unknown scalar operation: {op}")


def scalars_equal(a: Scalar, b: Scalar) -> bool:
    """Equality by cross-multiplication of numerators and denominators"""
    return not (a.numer * b.denom - b.numer * a.denom)


def quantum_integer(ctx: ParamContext, m: int, i: int) -> Scalar:
    """(m)_{q_i}: 1 + q_i + ... + q_i^(m-1), and -q_i^m (-m)_{q_i} for negative m"""
    q = ctx.q(i)
    if m >= 0:
        total = ctx.zero
        for power in range(m):
            total += q ** power
        return total
    return -(q ** m) * quantum_integer(ctx, -m, i)


def as_q_power(ctx: ParamContext, s: Scalar, i: int) -> Optional[int]:
    """
    Exponent a with s = q_i^a exactly, or None

    Raises:
        ZeroScalar: if s is zero
    """
    if not s:
        raise ZeroScalar("as_q_power is undefined on the zero scalar")
    ctx._check_axis(i)
    numer_terms = s.numer.terms()
    denom_terms = s.denom.terms()
    if len(numer_terms) != 1 or len(denom_terms) != 1:
        return None

    (n_mon, n_coeff), = numer_terms
    (d_mon, d_coeff), = denom_terms
    if n_coeff != d_coeff:
        return None
    axis = i - 1
    for position, (a, b) in enumerate(zip(n_mon, d_mon)):
        if position != axis and (a or b):
            return None
    return n_mon[axis] - d_mon[axis]


def _format_coeff(coeff) -> str:
    numerator, denominator = int(coeff.numerator), int(coeff.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _format_terms(terms: List[Tuple[Tuple[int, ...], object]], names: List[str]) -> str:
    pieces = []
    for monom, coeff in terms:
        factors = []
        for name, exp in zip(names, monom):
            if exp == 1:
                factors.append(name)
            elif exp:
                factors.append(f"{name}^{exp}")
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if factors and magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([_format_coeff(magnitude)] + factors)
        pieces.append((negative, body))

    if not pieces:
        return '0'
    text = ('-' if pieces[0][0] else '') + pieces[0][1]
    for negative, body in pieces[1:]:
        text += (' - ' if negative else ' + ') + body
    return text


def format_scalar(s: Scalar) -> str:
    """
    Canonical text form

    Monomial denominators fold into negative exponents (`3*q1^2*l12^-1`);
    anything else prints as `(num) / (den)`.
    """
    if not s:
        return '0'
    names = [str(symbol) for symbol in s.field.symbols]
    numer_terms = s.numer.terms()
    denom_terms = s.denom.terms()

    if len(denom_terms) == 1:
        d_mon, d_coeff = denom_terms[0]
        folded = [
            (tuple(a - b for a, b in zip(mon, d_mon)), coeff / d_coeff)
            for mon, coeff in numer_terms
        ]
        return _format_terms(folded, names)

    return f"({_format_terms(numer_terms, names)}) / ({_format_terms(denom_terms, names)})"


def is_single_term(s: Scalar) -> bool:
    """True when the canonical form has no top-level + or -"""
    return len(s.numer.terms()) == 1 and len(s.denom.terms()) == 1
