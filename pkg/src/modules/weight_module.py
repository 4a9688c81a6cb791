"""
Induced weight modules P_phi over the localized AJ algebra

P_phi has basis v_k (k in Z^n) with v_k of weight phi o sigma_k. Its unique
maximal submodule N_phi is spanned by basis vectors, so the simple quotient
S_phi is represented by vectors supported off N_phi.

Generator actions on v_k:
    x_i v_k = L_i(k) v_{k+e_i}               if k_i >= 0
            = L_i(k) F_x v_{k+e_i}           if k_i < 0
    y_i v_k = L_i(k)^-1 F_y v_{k-e_i}        if k_i > 0
            = L_i(k)^-1 v_{k-e_i}            if k_i <= 0
    z_i v_k = q_i^-k_i phi(z_i) v_k
with L_i(k) = prod_{j<i} l_ij^k_j, F_x = (q_i^-k_i phi(z_i) - 1)/(q_i - 1)
and F_y = (q_i^(1-k_i) phi(z_i) - 1)/(q_i - 1).
"""

import logging
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

from sympy.utilities.iterables import strongly_connected_components

from algebras.presentations import (Family, Letter, NormalElement, PresentationId, Vector, add_vectors,
                                    generator, unit_vector)
from algebras.twisting import tau_apply
from core.characters import Character, act, box, complexity, format_character, max_generic_symbol, value
from core.errors import ConfigurationError, SpecMismatch, WindowTooSmall
from core.scalars import LambdaMode, ParamContext, Scalar, ScalarLike, format_scalar, scalars_equal

logger = logging.getLogger(__name__)


class ModuleKind(Enum):
    P = 'P'
    S = 'S'


class Realization(Enum):
    """DIRECT uses the full skew matrix; TWIST twists the trivial-matrix module"""
    DIRECT = 'direct'
    TWIST = 'twist'


@dataclass(frozen=True)
class ModuleSpec:
    ctx: ParamContext
    phi: Character
    kind: ModuleKind = ModuleKind.P
    realization: Realization = Realization.DIRECT

    def __post_init__(self):
        if self.phi.n != self.ctx.n:
            raise SpecMismatch(f"Character of rank {self.phi.n} used with rank {self.ctx.n} context")
        if max_generic_symbol(self.phi) > self.ctx.generic_symbols:
            raise ConfigurationError(
                f"Character uses c{max_generic_symbol(self.phi)} but the context declares "
                f"{self.ctx.generic_symbols} generic symbols"
            )

    @property
    def n(self) -> int:
        return self.ctx.n

    def algebra(self) -> PresentationId:
        """The localized AJ presentation this module is defined over"""
        return PresentationId(Family.AJ, True, self.ctx)

    def describe(self) -> Dict[str, object]:
        info: Dict[str, object] = dict(self.ctx.describe())
        info.update({
            'phi': format_character(self.phi),
            'kind': self.kind.value,
            'realization': self.realization.value,
        })
        return info


def in_nphi(spec: ModuleSpec, k: Vector) -> bool:
    """v_k lies in N_phi: some integral axis has k past its wall"""
    for i in complexity(spec.phi):
        alpha = spec.phi.coords[i - 1].alpha
        ki = k[i - 1]
        if (alpha >= 0 and ki > alpha) or (alpha < 0 and ki <= alpha):
            return True
    return False


class WeightVector:
    """Finitely supported combination of the v_k; S-kind vectors drop N_phi components"""

    __slots__ = ('spec', 'entries')

    def __init__(self, spec: ModuleSpec, entries: Optional[Dict[Vector, Scalar]] = None):
        self.spec = spec
        quotient = spec.kind is ModuleKind.S
        self.entries: Dict[Vector, Scalar] = {
            tuple(k): c for k, c in (entries or {}).items()
            if c and not (quotient and in_nphi(spec, tuple(k)))
        }

    @classmethod
    def basis(cls, spec: ModuleSpec, k: Vector, coeff: Optional[ScalarLike] = None) -> 'WeightVector':
        c = spec.ctx.one if coeff is None else spec.ctx.scalar(coeff)
        return cls(spec, {tuple(k): c})

    def _check(self, other: 'WeightVector'):
        if other.spec != self.spec:
            raise SpecMismatch("Vectors belong to different module specs")

    def is_zero(self) -> bool:
        return not self.entries

    def coefficient(self, k: Vector) -> Scalar:
        return self.entries.get(tuple(k), self.spec.ctx.zero)

    def __add__(self, other: 'WeightVector') -> 'WeightVector':
        self._check(other)
        entries = dict(self.entries)
        for k, c in other.entries.items():
            entries[k] = entries.get(k, self.spec.ctx.zero) + c
        return WeightVector(self.spec, entries)

    def __neg__(self) -> 'WeightVector':
        return WeightVector(self.spec, {k: -c for k, c in self.entries.items()})

    def __sub__(self, other: 'WeightVector') -> 'WeightVector':
        return self + (-other)

    def scale(self, coeff: ScalarLike) -> 'WeightVector':
        s = self.spec.ctx.scalar(coeff)
        return WeightVector(self.spec, {k: c * s for k, c in self.entries.items()})

    def __mul__(self, coeff):
        return self.scale(coeff)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightVector) or other.spec != self.spec:
            return NotImplemented
        if self.entries.keys() != other.entries.keys():
            return False
        return all(scalars_equal(c, other.entries[k]) for k, c in self.entries.items())

    __hash__ = None

    def homogeneous_components(self) -> Dict[Character, 'WeightVector']:
        """Split by weight; each v_k is a weight vector of weight phi o sigma_k"""
        components: Dict[Character, Dict[Vector, Scalar]] = {}
        for k, c in self.entries.items():
            components.setdefault(weight_of(self.spec, k), {})[k] = c
        return {weight: WeightVector(self.spec, entries) for weight, entries in components.items()}

    def __str__(self) -> str:
        if not self.entries:
            return '0'
        parts = []
        for k in sorted(self.entries):
            label = 'v_(' + ','.join(str(x) for x in k) + ')'
            parts.append(f"({format_scalar(self.entries[k])})*{label}")
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f"WeightVector({self})"


def weight_of(spec: ModuleSpec, k: Vector) -> Character:
    return act(k, spec.phi)


def lambda_product(ctx: ParamContext, i: int, k: Vector) -> Scalar:
    """prod_{j<i} l_ij^k_j"""
    result = ctx.one
    for j in range(1, i):
        if k[j - 1]:
            result *= ctx.lam(i, j) ** k[j - 1]
    return result


def axis_factor(q: Scalar, phi_value: Scalar, kind: str, ki: int) -> Scalar:
    """Rank-one factor of the x or y action on v_k along one axis"""
    one = q.field.one
    if kind == 'x':
        if ki >= 0:
            return one
        return (q ** -ki * phi_value - 1) / (q - 1)
    if ki <= 0:
        return one
    return (q ** (1 - ki) * phi_value - 1) / (q - 1)


def _direct_coefficient(spec: ModuleSpec, letter: Letter, k: Vector) -> Tuple[Vector, Scalar]:
    kind, i, power = letter
    ctx = spec.ctx
    q = ctx.q(i)
    phi_i = value(ctx, spec.phi, i)
    if kind == 'z':
        return k, (q ** -k[i - 1] * phi_i) ** power
    factor = axis_factor(q, phi_i, kind, k[i - 1])
    lam = lambda_product(ctx, i, k)
    if kind == 'x':
        return add_vectors(k, unit_vector(spec.n, i)), lam * factor
    return add_vectors(k, unit_vector(spec.n, i, -1)), factor / lam


def action_coefficient(spec: ModuleSpec, letter: Letter, k: Vector) -> Tuple[Vector, Scalar]:
    """
    Target index and coefficient of letter . v_k in P_phi (no quotient projection)

    The TWIST realization acts by tau_k(g) in the trivial-matrix module.
    """
    k = tuple(k)
    if spec.realization is Realization.DIRECT:
        return _direct_coefficient(spec, letter, k)

    ones_ctx = spec.ctx.with_lambda_mode(LambdaMode.ALL_ONES)
    ones_spec = replace(spec, ctx=ones_ctx, realization=Realization.DIRECT)
    target, base = _direct_coefficient(ones_spec, letter, k)
    p_ones = PresentationId(Family.AJ, True, ones_ctx)
    twisted = tau_apply(k, generator(p_ones, letter), spec.ctx)
    (scale,) = twisted.terms.values()
    return target, scale * base


def act_gen(spec: ModuleSpec, letter: Letter, v: WeightVector) -> WeightVector:
    """
    Action of a single generator x_i, y_i or z_i^(+-1)

    Raises:
        SpecMismatch: if v belongs to another module spec
    """
    if v.spec != spec:
        raise SpecMismatch("Vector does not belong to this module spec")
    entries: Dict[Vector, Scalar] = {}
    for k, c in v.entries.items():
        target, coeff = action_coefficient(spec, letter, k)
        if coeff:
            entries[target] = entries.get(target, spec.ctx.zero) + c * coeff
    return WeightVector(spec, entries)


def act_element(spec: ModuleSpec, a: NormalElement, v: WeightVector) -> WeightVector:
    """Action of an AJ-B element, applying each word right to left"""
    if a.presentation != spec.algebra():
        raise SpecMismatch(f"Module is over {spec.algebra().label} with this context, got {a.presentation.label}")
    total = WeightVector(spec)
    for mono, coeff in a.terms.items():
        w = v
        for letter in reversed(mono.word()):
            w = act_gen(spec, letter, w)
            if w.is_zero():
                break
        total = total + w.scale(coeff)
    return total


def window(n: int, radius: int) -> List[Vector]:
    return list(box(n, radius))


def _inside(k: Vector, radius: int) -> bool:
    return all(-radius <= x <= radius for x in k)


def _step_letters(n: int) -> List[Letter]:
    letters: List[Letter] = []
    for i in range(1, n + 1):
        letters.extend([('x', i, 1), ('y', i, 1)])
    return letters


def _oracle_margin(spec: ModuleSpec) -> int:
    return max((abs(spec.phi.coords[i - 1].alpha) for i in complexity(spec.phi)), default=0) + 2


def nphi_oracle(spec: ModuleSpec, k: Vector, radius: int) -> bool:
    """
    Brute-force membership in N_phi: v_0 is not reachable from v_k by
    nonzero x/y steps inside [-radius, radius]^n

    Raises:
        WindowTooSmall: if the window cannot hold the walls and k with a margin
    """
    k = tuple(k)
    if radius < _oracle_margin(spec) or not _inside(k, radius - 1):
        raise WindowTooSmall(f"Radius {radius} too small for k={k} and phi={format_character(spec.phi)}")
    p_spec = replace(spec, kind=ModuleKind.P)
    letters = _step_letters(spec.n)
    origin = (0,) * spec.n
    seen = {k}
    queue = deque([k])
    while queue:
        current = queue.popleft()
        if current == origin:
            return False
        for letter in letters:
            target, coeff = action_coefficient(p_spec, letter, current)
            if coeff and target not in seen and _inside(target, radius):
                seen.add(target)
                queue.append(target)
    return True


def reaching_set(spec: ModuleSpec, radius: int) -> Set[Vector]:
    """All window points from which v_0 is reachable (one backward search)"""
    p_spec = replace(spec, kind=ModuleKind.P)
    n = spec.n
    origin = (0,) * n
    seen = {origin}
    queue = deque([origin])
    while queue:
        current = queue.popleft()
        for i in range(1, n + 1):
            # an x_i step from current - e_i, or a y_i step from current + e_i
            for letter, source in ((('x', i, 1), add_vectors(current, unit_vector(n, i, -1))),
                                   (('y', i, 1), add_vectors(current, unit_vector(n, i)))):
                if source in seen or not _inside(source, radius):
                    continue
                _, coeff = action_coefficient(p_spec, letter, source)
                if coeff:
                    seen.add(source)
                    queue.append(source)
    return seen


@dataclass
class GraphEdge:
    source: Vector
    target: Vector
    label: str
    coefficient: Scalar


@dataclass
class ActionGraph:
    """Generator action restricted to a window; `missing` holds zero-coefficient steps"""
    spec: ModuleSpec
    radius: int
    vertices: List[Vector] = field(default_factory=list)
    edges: List[GraphEdge] = field(default_factory=list)
    missing: List[GraphEdge] = field(default_factory=list)
    weights: Dict[Vector, Character] = field(default_factory=dict)

    def out_edges(self, k: Vector) -> List[GraphEdge]:
        return [edge for edge in self.edges if edge.source == k]


def action_graph(spec: ModuleSpec, radius: int, z_loops: bool = False) -> ActionGraph:
    """Vertices of the window (minus N_phi for S), edges where the action is nonzero"""
    if radius < 1:
        raise WindowTooSmall("Graph radius must be at least 1")
    quotient = spec.kind is ModuleKind.S
    vertices = [k for k in box(spec.n, radius) if not (quotient and in_nphi(spec, k))]
    vertex_set = set(vertices)
    graph = ActionGraph(spec, radius, vertices)
    letters: List[Letter] = _step_letters(spec.n)
    if z_loops:
        letters += [('z', i, 1) for i in range(1, spec.n + 1)]

    for k in vertices:
        graph.weights[k] = weight_of(spec, k)
        for letter in letters:
            target, coeff = action_coefficient(spec, letter, k)
            if target not in vertex_set:
                continue
            edge = GraphEdge(k, target, f"{letter[0]}{letter[1]}", coeff)
            if coeff:
                graph.edges.append(edge)
            else:
                graph.missing.append(edge)
    logger.debug(f"Action graph: {len(vertices)} vertices, {len(graph.edges)} edges, "
                 f"{len(graph.missing)} missing")
    return graph


def graph_regions(graph: ActionGraph) -> List[List[Vector]]:
    """Strongly connected regions of the x/y action graph"""
    edges = [(edge.source, edge.target) for edge in graph.edges if edge.source != edge.target]
    return [sorted(component) for component in strongly_connected_components((graph.vertices, edges))]


def letters_of(n: int, include_inverse: bool = True) -> List[Letter]:
    """All generator letters of the localized algebra of rank n"""
    letters = _step_letters(n)
    for i in range(1, n + 1):
        letters.append(('z', i, 1))
        if include_inverse:
            letters.append(('z', i, -1))
    return letters


def vectors_in(spec: ModuleSpec, points: Iterable[Vector]) -> List[Vector]:
    """Points that index a basis vector of the module (all of them for P)"""
    if spec.kind is ModuleKind.P:
        return list(points)
    return [k for k in points if not in_nphi(spec, k)]


def weight_multiplicities(spec: ModuleSpec, radius: int) -> Dict[Character, int]:
    """Dimension of each weight space met in the window"""
    counts: Dict[Character, int] = {}
    for k in vectors_in(spec, box(spec.n, radius)):
        weight = weight_of(spec, k)
        counts[weight] = counts.get(weight, 0) + 1
    return counts
