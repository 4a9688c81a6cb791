"""
q-difference representation on the quantum affine space

Polynomials in y_1..y_n with y_i y_j = l_ij y_j y_i, stored in ascending
normal order. The localized AJ algebra acts by
    x_i -> partial_i,  y_i -> m_i,  z_i -> xi_i
where m_i is left multiplication by y_i, xi_i scales y_i by q_i and
    partial_i f = (q_i - 1)^-1 y_i^-1 (xi_i(f) - f).
"""

import itertools
import logging
from collections import deque
from typing import Callable, Dict, List, Optional, Tuple

from algebras.presentations import (Family, Identity, Letter, PresentationId, Vector, add_vectors,
                                    defining_identities, unit_vector)
from core.characters import act, evaluate, trivial_character
from core.report import CheckReport
from core.scalars import ParamContext, Scalar, ScalarLike, format_scalar, is_single_term, scalars_equal
from modules.weight_module import (ModuleKind, ModuleSpec, WeightVector, act_gen, action_coefficient, in_nphi,
                                   letters_of)

logger = logging.getLogger(__name__)


class QPolynomial:
    """Finite combination of normal-ordered monomials y^k, k in N^n"""

    __slots__ = ('ctx', 'terms')

    def __init__(self, ctx: ParamContext, terms: Optional[Dict[Vector, Scalar]] = None):
        self.ctx = ctx
        self.terms: Dict[Vector, Scalar] = {tuple(k): c for k, c in (terms or {}).items() if c}
        for k in self.terms:
            if len(k) != ctx.n or min(k) < 0:
                raise ValueError(f"Exponent vector {k} is not in N^{ctx.n}")

    @classmethod
    def monomial(cls, ctx: ParamContext, k: Vector, coeff: Optional[ScalarLike] = None) -> 'QPolynomial':
        return cls(ctx, {tuple(k): ctx.one if coeff is None else ctx.scalar(coeff)})

    @classmethod
    def one(cls, ctx: ParamContext) -> 'QPolynomial':
        return cls.monomial(ctx, (0,) * ctx.n)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'QPolynomial') -> 'QPolynomial':
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, self.ctx.zero) + c
        return QPolynomial(self.ctx, terms)

    def __neg__(self) -> 'QPolynomial':
        return QPolynomial(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: 'QPolynomial') -> 'QPolynomial':
        return self + (-other)

    def scale(self, coeff: ScalarLike) -> 'QPolynomial':
        s = self.ctx.scalar(coeff)
        return QPolynomial(self.ctx, {k: c * s for k, c in self.terms.items()})

    def __mul__(self, coeff):
        return self.scale(coeff)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(scalars_equal(c, other.terms[k]) for k, c in self.terms.items())

    __hash__ = None

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for k in sorted(self.terms, reverse=True):
            factors = [f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in enumerate(k, start=1) if e]
            word = '*'.join(factors)
            coeff = self.terms[k]
            text = format_scalar(coeff)
            if not word:
                pieces.append(text if is_single_term(coeff) else f"({text})")
            elif text == '1':
                pieces.append(word)
            elif text == '-1':
                pieces.append(f"-{word}")
            elif is_single_term(coeff):
                pieces.append(f"{text}*{word}")
            else:
                pieces.append(f"({text})*{word}")
        return ' + '.join(pieces).replace('+ -', '- ')


def _map_terms(p: QPolynomial, rule: Callable[[Vector], Optional[Tuple[Vector, Scalar]]]) -> QPolynomial:
    terms: Dict[Vector, Scalar] = {}
    for k, c in p.terms.items():
        image = rule(k)
        if image is None:
            continue
        target, factor = image
        terms[target] = terms.get(target, p.ctx.zero) + c * factor
    return QPolynomial(p.ctx, terms)


def xi(i: int, p: QPolynomial, power: int = 1) -> QPolynomial:
    """y_j -> q_i^delta_ij y_j, so y^k is scaled by q_i^(power k_i)"""
    q = p.ctx.q(i)
    return _map_terms(p, lambda k: (k, q ** (power * k[i - 1])))


def xi_inverse(i: int, p: QPolynomial) -> QPolynomial:
    return xi(i, p, -1)


def _reorder_scalar(ctx: ParamContext, i: int, k: Vector, sign: int) -> Scalar:
    """prod_{j<i} l_ij^(sign k_j): moving y_i^(+-1) past the lower-index part of y^k"""
    result = ctx.one
    for j in range(1, i):
        if k[j - 1]:
            result *= ctx.lam(i, j) ** (sign * k[j - 1])
    return result


def m(i: int, p: QPolynomial) -> QPolynomial:
    """Left multiplication by y_i, reordered to ascending normal order"""
    ctx = p.ctx
    e = unit_vector(ctx.n, i)
    return _map_terms(p, lambda k: (add_vectors(k, e), _reorder_scalar(ctx, i, k, 1)))


def _left_divide(i: int, p: QPolynomial) -> QPolynomial:
    """y_i^-1 p, exact when no term is free of y_i"""
    ctx = p.ctx
    down = unit_vector(ctx.n, i, -1)
    for k in p.terms:
        if k[i - 1] == 0:
            raise ValueError(f"y{i}^-1 applied to a term without y{i}")
    return _map_terms(p, lambda k: (add_vectors(k, down), _reorder_scalar(ctx, i, k, -1)))


def partial(i: int, p: QPolynomial) -> QPolynomial:
    """(q_i - 1)^-1 y_i^-1 (xi_i(f) - f)"""
    q = p.ctx.q(i)
    return _left_divide(i, xi(i, p) - p).scale(p.ctx.one / (q - 1))


def partial_verbatim(i: int, p: QPolynomial) -> QPolynomial:
    """(q_i - 1) y_i^-1 (xi_i(f) - f): the constant as literally printed in the source formula"""
    q = p.ctx.q(i)
    return _left_divide(i, xi(i, p) - p).scale(q - 1)


def apply_letter(letter: Letter, p: QPolynomial, verbatim: bool = False) -> QPolynomial:
    kind, i, power = letter
    if kind == 'x':
        return partial_verbatim(i, p) if verbatim else partial(i, p)
    if kind == 'y':
        return m(i, p)
    return xi(i, p, power)


def apply_identity(identity: Identity, p: QPolynomial, verbatim: bool = False) -> QPolynomial:
    """Evaluate an algebra identity as an operator on p; words act right to left"""
    total = QPolynomial(p.ctx)
    for coeff, word in identity.terms:
        value = p
        for letter in reversed(word):
            value = apply_letter(letter, value, verbatim)
            if value.is_zero():
                break
        total = total + value.scale(coeff)
    return total


def monomials_up_to(n: int, degree: int) -> List[Vector]:
    """k in N^n with |k| <= degree"""
    return [k for k in itertools.product(range(degree + 1), repeat=n) if sum(k) <= degree]


def _unit_identity(ctx: ParamContext, i: int) -> Identity:
    one = ctx.one
    return Identity.build((one, (('x', i, 1), ('y', i, 1))), (-ctx.q(i), (('y', i, 1), ('x', i, 1))), (-one, ()))


def verbatim_constant_failures(ctx: ParamContext, degree: int) -> List[Tuple[int, Vector, str]]:
    """Monomials on which x_i y_i - q_i y_i x_i - 1 does not vanish with the literal constant"""
    failures = []
    for i in range(1, ctx.n + 1):
        identity = _unit_identity(ctx, i)
        for k in monomials_up_to(ctx.n, degree):
            value = apply_identity(identity, QPolynomial.monomial(ctx, k), verbatim=True)
            if not value.is_zero():
                failures.append((i, k, str(value)))
    return failures


def check_qdiff_morphism(ctx: ParamContext, degree: int) -> CheckReport:
    """Every defining identity of the localized AJ algebra, as operators on y^k with |k| <= degree"""
    if degree < 1:
        raise ValueError("Degree bound must be at least 1")
    p = PresentationId(Family.AJ, True, ctx)
    report = CheckReport('qdiff-check', {**ctx.describe(), 'degree': degree})
    monomials = [QPolynomial.monomial(ctx, k) for k in monomials_up_to(ctx.n, degree)]

    for identity in defining_identities(p):
        witness = None
        for poly in monomials:
            value = apply_identity(identity, poly)
            if not value.is_zero():
                witness = f"on {poly}: {value}"
                break
        report.record(identity.name, witness is None, witness)

    failures = verbatim_constant_failures(ctx, min(degree, 2))
    if failures:
        i, k, value = failures[0]
        report.note(
            f"literal constant (q_i - 1) in partial_i fails x{i}*y{i} - q{i}*y{i}*x{i} - 1 "
            f"on {len(failures)} monomials, e.g. y^{k} -> {value}; the reciprocal (q_i - 1)^-1 is used"
        )
    else:
        report.note("literal constant (q_i - 1) in partial_i satisfied the unit relation")
    report.note(f"{len(monomials)} monomials, degree bound {degree}")
    return report.finish()


def _embed(spec: ModuleSpec, p: QPolynomial, mu: Dict[Vector, Scalar]) -> WeightVector:
    """y^k -> mu_k v_{-k}"""
    return WeightVector(spec, {tuple(-x for x in k): c * mu[k] for k, c in p.terms.items()})


def check_E_is_S1(ctx: ParamContext, radius: int) -> CheckReport:
    """Weights, supports and an explicit intertwiner y^k -> mu_k v_{-k} into S of the trivial character"""
    if radius < 2:
        raise ValueError("Radius must be at least 2")
    n = ctx.n
    trivial = trivial_character(n)
    spec = ModuleSpec(ctx, trivial, ModuleKind.S)
    report = CheckReport('E-is-S1', {**ctx.describe(), 'radius': radius})
    window = list(itertools.product(range(radius + 1), repeat=n))

    witness = None
    for k in window:
        poly = QPolynomial.monomial(ctx, k)
        weight = act(tuple(-x for x in k), trivial)
        for i in range(1, n + 1):
            scaled = xi(i, poly).terms[k]
            if not scalars_equal(scaled, evaluate(ctx, weight, unit_vector(n, i))):
                witness = f"k={k}, axis {i}"
                break
        if witness:
            break
    report.record('xi_i(y^k) matches the weight of v_-k', witness is None, witness)

    witness = None
    for k in itertools.product(range(-radius, radius + 1), repeat=n):
        if (not in_nphi(spec, k)) != all(x <= 0 for x in k):
            witness = f"k={k}"
            break
    report.record('support of S is {-k : k in N^n}', witness is None, witness)

    origin = (0,) * n
    mu: Dict[Vector, Scalar] = {origin: ctx.one}
    conflicts = []
    queue = deque([origin])
    while queue:
        k = queue.popleft()
        for i in range(1, n + 1):
            up = add_vectors(k, unit_vector(n, i))
            if up[i - 1] > radius:
                continue
            _, e_coeff = next(iter(m(i, QPolynomial.monomial(ctx, k)).terms.items()))
            _, s_coeff = action_coefficient(spec, ('y', i, 1), tuple(-x for x in k))
            candidate = mu[k] * s_coeff / e_coeff
            if up not in mu:
                mu[up] = candidate
                queue.append(up)
            elif not scalars_equal(mu[up], candidate):
                conflicts.append(up)
    report.record('mu_0 = 1', scalars_equal(mu[origin], ctx.one))
    report.record('mu determined uniquely on the window', len(mu) == len(window) and not conflicts,
                  f"conflicts at {conflicts[:3]}" if conflicts else None)

    interior = [k for k in window if max(k) <= radius - 1]
    for letter in letters_of(n):
        kind, index, power = letter
        witness = None
        for k in interior:
            poly = QPolynomial.monomial(ctx, k)
            lhs = _embed(spec, apply_letter(letter, poly), mu)
            rhs = act_gen(spec, letter, _embed(spec, poly, mu))
            if lhs != rhs:
                witness = f"k={k}: {lhs} != {rhs}"
                break
        name = f"{kind}{index}" + ('' if power == 1 else '^-1')
        report.record(f"{name} intertwined by y^k -> mu_k v_-k", witness is None, witness)

    report.note(f"window [0, {radius}]^{n}, intertwining checked on [0, {radius - 1}]^{n}")
    return report.finish()


def simplicity_evidence(ctx: ParamContext, degree: int) -> CheckReport:
    """From every y^k, partial steps reach a nonzero constant and m steps from 1 reach y^k"""
    report = CheckReport('qdiff-simplicity', {**ctx.describe(), 'degree': degree})
    down_witness = None
    up_witness = None
    for k in monomials_up_to(ctx.n, degree):
        poly = QPolynomial.monomial(ctx, k)
        for i in range(1, ctx.n + 1):
            for _ in range(k[i - 1]):
                poly = partial(i, poly)
        if set(poly.terms) != {(0,) * ctx.n}:
            down_witness = down_witness or f"k={k}"

        poly = QPolynomial.one(ctx)
        for i in range(ctx.n, 0, -1):
            for _ in range(k[i - 1]):
                poly = m(i, poly)
        if set(poly.terms) != {k}:
            up_witness = up_witness or f"k={k}"
    report.record('partial steps descend to a nonzero constant', down_witness is None, down_witness)
    report.record('m steps from 1 reach every monomial', up_witness is None, up_witness)
    return report.finish()

