"""
Quantized Weyl Algebra Presentations
Rewrite engine producing PBW normal forms for the four presentations

Two families of relations are supported (AJ and Maltsiniotis), each in a
polynomial form (A) and a localized form (B) where the z_i are inverted.

Normal forms:
    A-family: PBWMonomial(j, i) is the word y_1^j1 x_1^i1 ... y_n^jn x_n^in
    B-family: NormalMonomial(k, m) is b_k z^m, where b_k takes x_s^k_s for
              k_s >= 0 and y_s^-k_s for k_s < 0, in ascending index order

Products are computed a letter at a time: each letter of the right factor is
moved left past higher-index blocks (a scalar), then merged into its own block
using the closed forms of y_t x_t and x_t y_t.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

from typing_extensions import TypeAlias

from core.errors import PresentationMismatch
from core.report import CheckReport
from core.scalars import (ParamContext, Scalar, ScalarLike, format_scalar, is_single_term,
                          quantum_integer, scalars_equal)

logger = logging.getLogger(__name__)

Vector: TypeAlias = Tuple[int, ...]
# (kind, index, power): kind in 'x', 'y', 'z'; only z carries power -1
Letter: TypeAlias = Tuple[str, int, int]


class Family(Enum):
    AJ = 'aj'
    MALTSINIOTIS = 'maltsiniotis'


@dataclass(frozen=True)
class PresentationId:
    family: Family
    localized: bool
    ctx: ParamContext

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def label(self) -> str:
        family = 'AJ' if self.family is Family.AJ else 'Malt'
        return f"{family}-{'B' if self.localized else 'A'}"

    def with_ctx(self, ctx: ParamContext) -> 'PresentationId':
        return PresentationId(self.family, self.localized, ctx)

    def describe(self) -> Dict[str, object]:
        info: Dict[str, object] = {'presentation': self.label}
        info.update(self.ctx.describe())
        return info


def unit_vector(n: int, i: int, scale: int = 1) -> Vector:
    return tuple(scale if s == i else 0 for s in range(1, n + 1))


def zero_vector(n: int) -> Vector:
    return (0,) * n


def add_vectors(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _letter_text(letter: Letter) -> str:
    kind, index, power = letter
    return f"{kind}{index}" if power == 1 else f"{kind}{index}^{power}"


def _power_text(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


@dataclass(frozen=True, order=True)
class PBWMonomial:
    """y_1^j1 x_1^i1 ... y_n^jn x_n^in"""
    j: Vector
    i: Vector

    def word(self) -> Tuple[Letter, ...]:
        letters: List[Letter] = []
        for s, (js, is_) in enumerate(zip(self.j, self.i), start=1):
            letters.extend([('y', s, 1)] * js)
            letters.extend([('x', s, 1)] * is_)
        return tuple(letters)

    def degree(self) -> Vector:
        return tuple(a - b for a, b in zip(self.i, self.j))

    def render(self) -> str:
        factors = []
        for s, (js, is_) in enumerate(zip(self.j, self.i), start=1):
            if js:
                factors.append(_power_text(f"y{s}", js))
            if is_:
                factors.append(_power_text(f"x{s}", is_))
        return '*'.join(factors)


@dataclass(frozen=True, order=True)
class NormalMonomial:
    """b_k z^m"""
    k: Vector
    m: Vector

    def word(self) -> Tuple[Letter, ...]:
        letters: List[Letter] = []
        for s, ks in enumerate(self.k, start=1):
            if ks > 0:
                letters.extend([('x', s, 1)] * ks)
            elif ks < 0:
                letters.extend([('y', s, 1)] * -ks)
        for s, ms in enumerate(self.m, start=1):
            letters.extend([('z', s, 1 if ms > 0 else -1)] * abs(ms))
        return tuple(letters)

    def degree(self) -> Vector:
        return self.k

    def render(self) -> str:
        factors = []
        for s, ks in enumerate(self.k, start=1):
            if ks > 0:
                factors.append(_power_text(f"x{s}", ks))
            elif ks < 0:
                factors.append(_power_text(f"y{s}", -ks))
        for s, ms in enumerate(self.m, start=1):
            if ms:
                factors.append(_power_text(f"z{s}", ms))
        return '*'.join(factors)


Monomial = Union[PBWMonomial, NormalMonomial]


def unit_monomial(p: PresentationId) -> Monomial:
    zero = zero_vector(p.n)
    return NormalMonomial(zero, zero) if p.localized else PBWMonomial(zero, zero)


def format_linear_combination(pairs: Iterable[Tuple[Scalar, str]]) -> str:
    """Render coefficient/word pairs as `x1*y1 - q1*y1*x1 - 1`"""
    pieces = []
    for coeff, word in pairs:
        text = format_scalar(coeff)
        if is_single_term(coeff):
            negative = text.startswith('-')
            magnitude = text[1:] if negative else text
            if not word:
                body = magnitude
            elif magnitude == '1':
                body = word
            else:
                body = f"{magnitude}*{word}"
        else:
            negative = False
            body = f"({text})*{word}" if word else f"({text})"
        pieces.append((negative, body))

    if not pieces:
        return '0'
    rendered = ('-' if pieces[0][0] else '') + pieces[0][1]
    for negative, body in pieces[1:]:
        rendered += (' - ' if negative else ' + ') + body
    return rendered


class NormalElement:
    """Finite combination of normal monomials; zero coefficients are never stored"""

    __slots__ = ('presentation', 'terms')

    def __init__(self, presentation: PresentationId, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.presentation = presentation
        self.terms: Dict[Monomial, Scalar] = {
            mono: coeff for mono, coeff in (terms or {}).items() if coeff
        }

    @classmethod
    def zero(cls, p: PresentationId) -> 'NormalElement':
        return cls(p)

    @classmethod
    def one(cls, p: PresentationId) -> 'NormalElement':
        return cls(p, {unit_monomial(p): p.ctx.one})

    @classmethod
    def monomial(cls, p: PresentationId, mono: Monomial,
                 coeff: Optional[ScalarLike] = None) -> 'NormalElement':
        expected = NormalMonomial if p.localized else PBWMonomial
        if not isinstance(mono, expected):
            raise PresentationMismatch(f"{type(mono).__name__} is not a normal monomial of {p.label}")
        value = p.ctx.one if coeff is None else p.ctx.scalar(coeff)
        return cls(p, {mono: value})

    @classmethod
    def scalar(cls, p: PresentationId, value: ScalarLike) -> 'NormalElement':
        return cls(p, {unit_monomial(p): p.ctx.scalar(value)})

    def _check(self, other: 'NormalElement'):
        if other.presentation != self.presentation:
            raise PresentationMismatch(
                f"Cannot combine {self.presentation.label} and {other.presentation.label} elements"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, self.presentation.ctx.zero)

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __add__(self, other):
        if not isinstance(other, NormalElement):
            other = NormalElement.scalar(self.presentation, other)
        self._check(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, self.presentation.ctx.zero) + coeff
        return NormalElement(self.presentation, terms)

    __radd__ = __add__

    def __neg__(self):
        return NormalElement(self.presentation, {mono: -coeff for mono, coeff in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NormalElement):
            other = NormalElement.scalar(self.presentation, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value: ScalarLike) -> 'NormalElement':
        s = self.presentation.ctx.scalar(value)
        return NormalElement(self.presentation, {mono: coeff * s for mono, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NormalElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars are central
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalElement) or other.presentation != self.presentation:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(scalars_equal(coeff, other.terms[mono]) for mono, coeff in self.terms.items())

    __hash__ = None

    def homogeneous_components(self) -> Dict[Vector, 'NormalElement']:
        """Split by Z^n-degree: deg x_i = e_i, deg y_i = -e_i, deg z_i = 0"""
        components: Dict[Vector, Dict[Monomial, Scalar]] = {}
        for mono, coeff in self.terms.items():
            components.setdefault(mono.degree(), {})[mono] = coeff
        return {deg: NormalElement(self.presentation, terms) for deg, terms in components.items()}

    def __str__(self) -> str:
        return format_linear_combination((coeff, mono.render()) for mono, coeff in self.sorted_terms())

    def __repr__(self) -> str:
        return f"NormalElement({self.presentation.label}, {self})"


def _skew(p: PresentationId, left: str, s: int, right: str, t: int) -> Scalar:
    """Scalar c with L_s g_t = c g_t L_s, for s > t"""
    ctx = p.ctx
    lam = ctx.lam(s, t)
    if p.family is Family.AJ:
        return lam if left == right else ctx.one / lam
    q = ctx.q(t)
    if left == 'x' and right == 'x':
        return lam / q
    if left == 'y' and right == 'y':
        return lam
    if left == 'y':
        return ctx.one / lam
    return q / lam


def _z_shift(p: PresentationId, m: Vector, kind: str, t: int) -> Scalar:
    """Scalar c with z^m g_t = c g_t z^m"""
    if p.family is Family.AJ:
        exponent = m[t - 1]
    else:
        exponent = sum(m[t - 1:])
    q = p.ctx.q(t)
    return q ** (-exponent if kind == 'x' else exponent)


def _b_times_letter(p: PresentationId, mono: NormalMonomial,
                    letter: Letter) -> Tuple[Tuple[Monomial, Scalar], ...]:
    kind, t, power = letter
    ctx = p.ctx
    k, m = list(mono.k), list(mono.m)

    if kind == 'z':
        m[t - 1] += power
        return ((NormalMonomial(tuple(k), tuple(m)), ctx.one),)

    coeff = _z_shift(p, mono.m, kind, t)
    for s in range(t + 1, p.n + 1):
        ks = k[s - 1]
        if ks:
            coeff *= _skew(p, 'x' if ks > 0 else 'y', s, kind, t) ** abs(ks)

    kt = k[t - 1]
    k[t - 1] += 1 if kind == 'x' else -1
    new_k = tuple(k)
    if (kind == 'x' and kt >= 0) or (kind == 'y' and kt <= 0):
        return ((NormalMonomial(new_k, tuple(m)), coeff),)

    # y_t x_t = (z_t - w)/(q_t - 1) and x_t y_t = (q_t z_t - w)/(q_t - 1),
    # with w = 1 (AJ) or z_{t-1} (Maltsiniotis); both commute with higher blocks
    q = ctx.q(t)
    upper = list(m)
    upper[t - 1] += 1
    lower = list(m)
    if p.family is Family.MALTSINIOTIS and t > 1:
        lower[t - 2] += 1
    lead = coeff * q if kind == 'y' else coeff
    return (
        (NormalMonomial(new_k, tuple(upper)), lead / (q - 1)),
        (NormalMonomial(new_k, tuple(lower)), -coeff / (q - 1)),
    )


def _pbw_times_letter(p: PresentationId, mono: PBWMonomial,
                      letter: Letter) -> Tuple[Tuple[Monomial, Scalar], ...]:
    kind, t, power = letter
    if kind == 'z':
        raise PresentationMismatch("z is not a letter of the polynomial presentations")
    ctx = p.ctx
    j, i = list(mono.j), list(mono.i)

    coeff = ctx.one
    for s in range(t + 1, p.n + 1):
        if i[s - 1]:
            coeff *= _skew(p, 'x', s, kind, t) ** i[s - 1]
        if j[s - 1]:
            coeff *= _skew(p, 'y', s, kind, t) ** j[s - 1]

    if kind == 'x':
        i[t - 1] += 1
        return ((PBWMonomial(tuple(j), tuple(i)), coeff),)

    # x_t^a y_t = q_t^a y_t x_t^a + (a)_{q_t} w x_t^(a-1)
    jt, it = j[t - 1], i[t - 1]
    results: Dict[Monomial, Scalar] = {}
    raised = list(j)
    raised[t - 1] += 1
    results[PBWMonomial(tuple(raised), tuple(i))] = coeff * ctx.q(t) ** it
    if it == 0:
        return tuple(results.items())

    factor = coeff * quantum_integer(ctx, it, t)
    lowered_i = list(i)
    lowered_i[t - 1] -= 1
    if p.family is Family.AJ or t == 1:
        results[PBWMonomial(tuple(j), tuple(lowered_i))] = factor
        return tuple(results.items())

    padding = (0,) * (p.n - t + 1)
    prefix = PBWMonomial(tuple(j[:t - 1]) + padding, tuple(i[:t - 1]) + padding)
    prefixed = multiply(NormalElement.monomial(p, prefix), z_element(p, t - 1))
    for head, head_coeff in prefixed.terms.items():
        merged = PBWMonomial(
            head.j[:t - 1] + (jt,) + tuple(j[t:]),
            head.i[:t - 1] + (it - 1,) + tuple(i[t:]),
        )
        results[merged] = results.get(merged, ctx.zero) + factor * head_coeff
    return tuple(results.items())


@lru_cache(maxsize=None)
def _mono_times_letter(p: PresentationId, mono: Monomial,
                       letter: Letter) -> Tuple[Tuple[Monomial, Scalar], ...]:
    if p.localized:
        return _b_times_letter(p, mono, letter)
    return _pbw_times_letter(p, mono, letter)


def _times_letter(p: PresentationId, terms: Dict[Monomial, Scalar], letter: Letter) -> Dict[Monomial, Scalar]:
    result: Dict[Monomial, Scalar] = {}
    for mono, coeff in terms.items():
        for product_mono, product_coeff in _mono_times_letter(p, mono, letter):
            result[product_mono] = result.get(product_mono, p.ctx.zero) + coeff * product_coeff
    return {mono: coeff for mono, coeff in result.items() if coeff}


def multiply(a: NormalElement, b: NormalElement) -> NormalElement:
    """
    Product in the algebra, rewritten to normal form

    Raises:
        PresentationMismatch: if a and b come from different presentations
    """
    a._check(b)
    p = a.presentation
    result: Dict[Monomial, Scalar] = {}
    for mono_b, coeff_b in b.terms.items():
        partial = dict(a.terms)
        for letter in mono_b.word():
            partial = _times_letter(p, partial, letter)
            if not partial:
                break
        for mono, coeff in partial.items():
            result[mono] = result.get(mono, p.ctx.zero) + coeff * coeff_b
    return NormalElement(p, result)


def cache_size() -> int:
    return _mono_times_letter.cache_info().currsize


def z_element(p: PresentationId, i: int) -> NormalElement:
    """z_i = x_i y_i - y_i x_i in the presentation's normal form (z_0 = 1)"""
    if i == 0:
        return NormalElement.one(p)
    ctx = p.ctx
    n = p.n
    if p.localized:
        return NormalElement.monomial(p, NormalMonomial(zero_vector(n), unit_vector(n, i)))

    terms: Dict[Monomial, Scalar] = {unit_monomial(p): ctx.one}
    axes = [i] if p.family is Family.AJ else range(1, i + 1)
    for j in axes:
        e = unit_vector(n, j)
        terms[PBWMonomial(e, e)] = ctx.q(j) - 1
    return NormalElement(p, terms)


def generator(p: PresentationId, letter: Letter) -> NormalElement:
    """Image of a single generator letter"""
    kind, i, power = letter
    n = p.n
    if not 1 <= i <= n:
        raise PresentationMismatch(f"Generator {_letter_text(letter)} outside rank {n}")
    if kind == 'z':
        if power == 1 and not p.localized:
            return z_element(p, i)
        if not p.localized:
            raise PresentationMismatch(f"z{i}^-1 exists only in the localized presentations")
        return NormalElement.monomial(p, NormalMonomial(zero_vector(n), unit_vector(n, i, power)))
    if power != 1:
        raise PresentationMismatch(f"{kind}{i} cannot carry a negative exponent")

    e = unit_vector(n, i)
    zero = zero_vector(n)
    if p.localized:
        return NormalElement.monomial(p, NormalMonomial(e if kind == 'x' else unit_vector(n, i, -1), zero))
    if kind == 'x':
        return NormalElement.monomial(p, PBWMonomial(zero, e))
    return NormalElement.monomial(p, PBWMonomial(e, zero))


@dataclass(frozen=True)
class Identity:
    """A linear combination of words that must vanish in the algebra"""
    name: str
    terms: Tuple[Tuple[Scalar, Tuple[Letter, ...]], ...]

    @classmethod
    def build(cls, *terms: Tuple[Scalar, Tuple[Letter, ...]]) -> 'Identity':
        name = format_linear_combination(
            (coeff, '*'.join(_letter_text(letter) for letter in word)) for coeff, word in terms
        )
        return cls(name, tuple(terms))


T = TypeVar('T')


def evaluate_identity(identity: Identity, image: Callable[[Letter], T],
                      product: Callable[[T, T], T], unit: T) -> T:
    """Evaluate an identity with letters sent through `image` and words multiplied by `product`"""
    total = None
    for coeff, word in identity.terms:
        value = unit
        for letter in word:
            value = product(value, image(letter))
        term = value * coeff
        total = term if total is None else total + term
    return total


def _x(i: int) -> Letter:
    return ('x', i, 1)


def _y(i: int) -> Letter:
    return ('y', i, 1)


def _z(i: int, power: int = 1) -> Letter:
    return ('z', i, power)


def defining_identities(p: PresentationId, perturb: bool = False) -> List[Identity]:
    """
    Defining relations, closed forms of z_i, the z-normality table and, in
    the localized forms, z_i z_i^-1 = 1.

    Args:
        p: Presentation whose relations are listed
        perturb: Replace q1 by q1^2 in the x1 y1 relation (exit-code testing)
    """
    ctx = p.ctx
    one = ctx.one
    n = p.n
    aj = p.family is Family.AJ
    identities: List[Identity] = []

    def rel(*terms: Tuple[Scalar, Tuple[Letter, ...]]):
        identities.append(Identity.build(*terms))

    if aj:
        pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    else:
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for i, j in pairs:
        lam = ctx.lam(i, j)
        skew_x = lam if aj else lam * ctx.q(i)
        skew_yx = one / lam if aj else one / (lam * ctx.q(i))
        rel((one, (_x(i), _x(j))), (-skew_x, (_x(j), _x(i))))
        rel((one, (_y(i), _y(j))), (-lam, (_y(j), _y(i))))
        rel((one, (_x(i), _y(j))), (-one / lam, (_y(j), _x(i))))
        rel((one, (_y(i), _x(j))), (-skew_yx, (_x(j), _y(i))))

    for i in range(1, n + 1):
        q = ctx.q(i)
        if perturb and i == 1:
            q = q ** 2
        terms = [(one, (_x(i), _y(i))), (-q, (_y(i), _x(i))), (-one, ())]
        if not aj:
            terms += [(-(ctx.q(j) - 1), (_y(j), _x(j))) for j in range(1, i)]
        rel(*terms)

    for i in range(1, n + 1):
        axes = [i] if aj else range(1, i + 1)
        rel((one, (_z(i),)), (-one, ()), *[(-(ctx.q(j) - 1), (_y(j), _x(j))) for j in axes])
        rel((one, (_z(i),)), (-one, (_x(i), _y(i))), (one, (_y(i), _x(i))))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            commutes = (j != i) if aj else (i < j)
            if commutes:
                cx = cy = one
            else:
                qj = ctx.q(j)
                cx, cy = one / qj, qj
            rel((one, (_z(i), _x(j))), (-cx, (_x(j), _z(i))))
            rel((one, (_z(i), _y(j))), (-cy, (_y(j), _z(i))))

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rel((one, (_z(i), _z(j))), (-one, (_z(j), _z(i))))

    if p.localized:
        for i in range(1, n + 1):
            rel((one, (_z(i), _z(i, -1))), (-one, ()))
            rel((one, (_z(i, -1), _z(i))), (-one, ()))

    return identities


def check_relations(p: PresentationId, perturb: bool = False) -> CheckReport:
    """Evaluate every defining identity through the rewrite engine"""
    report = CheckReport('relcheck', p.describe())
    if perturb:
        report.note("x1*y1 relation perturbed: q1 replaced by q1^2")

    images: Dict[Letter, NormalElement] = {}

    def image(letter: Letter) -> NormalElement:
        if letter not in images:
            images[letter] = generator(p, letter)
        return images[letter]

    unit = NormalElement.one(p)
    identities = defining_identities(p, perturb)
    logger.info(f"Checking {len(identities)} identities in {p.label}, n={p.n}")
    for identity in identities:
        value = evaluate_identity(identity, image, multiply, unit)
        report.record(identity.name, value.is_zero(), None if value.is_zero() else str(value))
    logger.debug(f"Rewrite cache holds {cache_size()} entries")
    return report.finish()
