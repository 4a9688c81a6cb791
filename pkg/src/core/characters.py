"""
Characters of the Laurent ring in z_1..z_n

A character is stored per coordinate as Integral(alpha), meaning
phi(z_i) = q_i^alpha, or Generic(t, alpha), meaning phi(z_i) = c_t * q_i^alpha.
The lattice Z^n acts by shifting alpha: (k . phi)(z_i) = q_i^(-k_i) phi(z_i).
"""

import itertools
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from core.errors import CharacterSyntaxError, SpecMismatch, byte_offset
from core.scalars import ParamContext, Scalar

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class Integral:
    alpha: int

    def shifted(self, k: int) -> 'Integral':
        return Integral(self.alpha - k)


@dataclass(frozen=True)
class Generic:
    t: int
    alpha: int = 0

    def shifted(self, k: int) -> 'Generic':
        return Generic(self.t, self.alpha - k)


Coordinate = Union[Integral, Generic]


@dataclass(frozen=True)
class Character:
    coords: Tuple[Coordinate, ...]

    @property
    def n(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return format_character(self)


def trivial_character(n: int) -> Character:
    """The character sending every z_i to 1"""
    return Character(tuple(Integral(0) for _ in range(n)))


def _check_length(k: Sequence[int], phi: Character):
    if len(k) != phi.n:
        raise SpecMismatch(f"Vector of length {len(k)} used with a rank {phi.n} character")


def act(k: Sequence[int], phi: Character) -> Character:
    """phi composed with sigma_k: coordinate i gets alpha_i - k_i"""
    _check_length(k, phi)
    return Character(tuple(coord.shifted(ki) for coord, ki in zip(phi.coords, k)))


def complexity(phi: Character) -> FrozenSet[int]:
    """Axes (1-based) where phi(z_i) is an integral power of q_i"""
    return frozenset(i for i, coord in enumerate(phi.coords, start=1) if isinstance(coord, Integral))


def same_orbit(phi: Character, psi: Character) -> bool:
    if phi.n != psi.n:
        return False
    for a, b in zip(phi.coords, psi.coords):
        if type(a) is not type(b):
            return False
        if isinstance(a, Generic) and a.t != b.t:
            return False
    return True


def tensor_factor(phi: Character) -> Tuple[Character, ...]:
    return tuple(Character((coord,)) for coord in phi.coords)


def product(*factors: Character) -> Character:
    coords: List[Coordinate] = []
    for factor in factors:
        coords.extend(factor.coords)
    return Character(tuple(coords))


def coordinate_value(ctx: ParamContext, coord: Coordinate, axis: int) -> Scalar:
    """Value of a single coordinate read against the parameter q_axis"""
    base = ctx.q(axis) ** coord.alpha
    if isinstance(coord, Generic):
        return ctx.c(coord.t) * base
    return base


def value(ctx: ParamContext, phi: Character, i: int) -> Scalar:
    """phi(z_i)"""
    return coordinate_value(ctx, phi.coords[i - 1], i)


def evaluate(ctx: ParamContext, phi: Character, m: Sequence[int]) -> Scalar:
    """phi(z^m) = prod_i phi(z_i)^m_i"""
    _check_length(m, phi)
    result = ctx.one
    for i, mi in enumerate(m, start=1):
        if mi:
            result *= value(ctx, phi, i) ** mi
    return result


def box(n: int, radius: int) -> Iterable[Vector]:
    """All integer vectors in [-radius, radius]^n, in lexicographic order"""
    return itertools.product(range(-radius, radius + 1), repeat=n)


def stabilizer(phi: Character, radius: int) -> List[Vector]:
    """Nonzero k in the box fixing phi; empty for every character of this family"""
    return [k for k in box(phi.n, radius) if any(k) and act(k, phi) == phi]


def orbit_injectivity(ctx: ParamContext, phi: Character, radius: int) -> bool:
    """k -> phi o sigma_k is injective on the box, judged on evaluated values"""
    seen = set()
    for k in box(phi.n, radius):
        shifted = act(k, phi)
        values = tuple(value(ctx, shifted, i) for i in range(1, phi.n + 1))
        if values in seen:
            return False
        seen.add(values)
    return True


def max_generic_symbol(phi: Character) -> int:
    return max((coord.t for coord in phi.coords if isinstance(coord, Generic)), default=0)


_COORD_PATTERN = re.compile(
    r'^(?:'
    r'(?P<one>1)'
    r'|q(?:\s*\^\s*(?P<qexp>-?\d+))?'
    r'|c(?P<t>\d+)(?:\s*\*\s*q(?:\s*\^\s*(?P<cexp>-?\d+))?(?P<cq>))?'
    r')$'
)


def _parse_coordinate(entry: str, offset: int) -> Coordinate:
    match = _COORD_PATTERN.match(entry)
    if not match:
        raise CharacterSyntaxError(f"Invalid character coordinate '{entry}'", offset)
    if match.group('one'):
        return Integral(0)
    if match.group('t') is not None:
        t = int(match.group('t'))
        if t < 1:
            raise CharacterSyntaxError(f"Generic symbols are numbered from 1, got c{t}", offset)
        if match.group('cq') is None:
            return Generic(t, 0)
        return Generic(t, int(match.group('cexp') or 1))
    return Integral(int(match.group('qexp') or 1))


def parse_character(text: str) -> Character:
    """
    Parse `[q^2, c1*q^-1, c2]`, optionally prefixed by `phi =`

    Raises:
        CharacterSyntaxError: with the byte offset of the bad entry
    """
    source = text
    start = 0
    prefix = re.match(r'\s*(?:phi\s*=\s*)?', source)
    if prefix:
        start = prefix.end()
    body = source[start:].rstrip()
    if not body.startswith('['):
        raise CharacterSyntaxError("Character literal must start with '['", byte_offset(text, start))
    if not body.endswith(']'):
        raise CharacterSyntaxError("Character literal must end with ']'", byte_offset(text, start + len(body)))

    inner_start = start + 1
    inner = body[1:-1]
    if not inner.strip():
        raise CharacterSyntaxError("Character literal has no coordinates", byte_offset(text, inner_start))

    coords: List[Coordinate] = []
    position = inner_start
    for raw in inner.split(','):
        leading = len(raw) - len(raw.lstrip())
        coords.append(_parse_coordinate(raw.strip(), byte_offset(text, position + leading)))
        position += len(raw) + 1
    return Character(tuple(coords))


def format_coordinate(coord: Coordinate) -> str:
    if isinstance(coord, Generic):
        if coord.alpha == 0:
            return f"c{coord.t}"
        return f"c{coord.t}*q^{coord.alpha}"
    return f"q^{coord.alpha}"


def format_character(phi: Character) -> str:
    return '[' + ', '.join(format_coordinate(coord) for coord in phi.coords) + ']'
