"""
Weight module verification suites

Every suite works on a finite window [-R, R]^n and returns a CheckReport.
"""

import logging
import random
from dataclasses import replace
from itertools import product as cartesian
from typing import Dict, FrozenSet, Iterable, List, Optional

from algebras.presentations import generator, multiply
from core.characters import Character, Generic, Integral, act, box, complexity, format_character, value
from core.report import CheckReport
from core.scalars import ParamContext
from modules.classification import fibres, isomorphic_S
from modules.weight_module import (ModuleKind, ModuleSpec, WeightVector, act_element, act_gen,
                                   action_coefficient, action_graph, in_nphi, letters_of,
                                   nphi_oracle, reaching_set, weight_multiplicities)
from validators.sampling import get_rng, random_vector

logger = logging.getLogger(__name__)


def _name(letter) -> str:
    kind, i, power = letter
    return f"{kind}{i}" + ('' if power == 1 else '^-1')


def module_axiom_check(spec: ModuleSpec, radius: int = 6, samples: int = 50,
                       rng: Optional[random.Random] = None) -> CheckReport:
    """g.(h.v) = (gh).v for every pair of generators on random vectors"""
    rng = rng or get_rng()
    p = spec.algebra()
    report = CheckReport('module-axiom', {**spec.describe(), 'radius': radius, 'samples': samples})
    vectors = [random_vector(spec, rng, radius - 2) for _ in range(samples)]
    letters = letters_of(spec.n)
    images = {letter: generator(p, letter) for letter in letters}
    for g in letters:
        for h in letters:
            gh = multiply(images[g], images[h])
            witness = None
            for v in vectors:
                if act_gen(spec, g, act_gen(spec, h, v)) != act_element(spec, gh, v):
                    witness = str(v)
                    break
            report.record(f"{_name(g)}.({_name(h)}.v) = ({_name(g)}{_name(h)}).v", witness is None, witness)
    report.note(f"vectors drawn from radius {radius - 2} (margin 2)")
    return report.finish()


def weight_decomposition_check(spec: ModuleSpec, radius: int = 4, samples: int = 20,
                               rng: Optional[random.Random] = None) -> CheckReport:
    """Vectors split into weight vectors, and each weight occurs once in the window"""
    rng = rng or get_rng()
    ctx = spec.ctx
    report = CheckReport('weight-decomposition', {**spec.describe(), 'radius': radius})
    sum_witness = weight_witness = None
    for _ in range(samples):
        v = random_vector(spec, rng, radius)
        components = v.homogeneous_components()
        total = WeightVector(spec)
        for weight, component in components.items():
            total = total + component
            for i in range(1, spec.n + 1):
                acted = act_gen(spec, ('z', i, 1), component)
                if weight_witness is None and acted != component.scale(value(ctx, weight, i)):
                    weight_witness = f"{component} under z{i}"
        if sum_witness is None and total != v:
            sum_witness = str(v)
    report.record('vectors are sums of their weight components', sum_witness is None, sum_witness)
    report.record('components are weight vectors', weight_witness is None, weight_witness)

    repeated = {format_character(w): c for w, c in weight_multiplicities(spec, radius).items() if c != 1}
    report.record('weight spaces are one-dimensional', not repeated,
                  None if not repeated else str(dict(list(repeated.items())[:3])))
    return report.finish()


def submodule_check(spec: ModuleSpec, radius: int = 4) -> CheckReport:
    """The x/y action never leaves N_phi from inside it"""
    p_spec = replace(spec, kind=ModuleKind.P)
    report = CheckReport('submodule', {**p_spec.describe(), 'radius': radius})
    witness = None
    for k in box(spec.n, radius):
        if not in_nphi(p_spec, k):
            continue
        for letter in letters_of(spec.n, include_inverse=False):
            target, coeff = action_coefficient(p_spec, letter, k)
            if coeff and not in_nphi(p_spec, target):
                witness = f"{_name(letter)} sends v_{k} to v_{target}"
                break
        if witness:
            break
    report.record('N_phi is stable under the generators', witness is None, witness)
    return report.finish()


def oracle_radius(phi: Character) -> int:
    return max((abs(phi.coords[i - 1].alpha) for i in complexity(phi)), default=0) + 4


def oracle_equivalence_check(spec: ModuleSpec, radius: Optional[int] = None,
                             spot_checks: int = 8) -> CheckReport:
    """in_nphi against window reachability of v_0"""
    radius = radius or oracle_radius(spec.phi)
    report = CheckReport('oracle-equivalence', {**spec.describe(), 'radius': radius})
    reach = reaching_set(spec, radius)
    interior = list(box(spec.n, radius - 1))
    disagreements = [k for k in interior if in_nphi(spec, k) != (k not in reach)]
    report.record(f"in_nphi agrees with reachability on {len(interior)} points", not disagreements,
                  None if not disagreements else f"first disagreement at k={disagreements[0]}")

    step = max(1, len(interior) // spot_checks)
    samples = interior[::step]
    mismatched = [k for k in samples if nphi_oracle(spec, k, radius) != in_nphi(spec, k)]
    report.record(f"forward oracle agrees on {len(samples)} spot checks", not mismatched,
                  None if not mismatched else f"k={mismatched[0]}")
    report.note(f"interior radius {radius - 1} (margin 1)")
    return report.finish()


def simplicity_check(spec: ModuleSpec, radius: Optional[int] = None) -> CheckReport:
    """Empty complexity: everything reaches v_0; otherwise something does not"""
    radius = radius or oracle_radius(spec.phi)
    report = CheckReport('simplicity', {**spec.describe(), 'radius': radius})
    reach = reaching_set(spec, radius)
    points = list(box(spec.n, radius))
    stuck = [k for k in points if k not in reach]
    if complexity(spec.phi):
        report.record('some vertex cannot reach v_0', bool(stuck))
    else:
        report.record('every vertex reaches v_0', not stuck, None if not stuck else f"k={stuck[0]}")
    return report.finish()


def structure_check(spec: ModuleSpec, radius: int = 4) -> CheckReport:
    """
    Rank-one action graph: one missing y1 edge at alpha+1 for alpha >= 0,
    one missing x1 edge at alpha for alpha < 0, none for a generic weight
    """
    report = CheckReport('structure', {**spec.describe(), 'radius': radius})
    graph = action_graph(replace(spec, kind=ModuleKind.P), radius)
    missing = [(edge.label, edge.source) for edge in graph.missing]
    coord = spec.phi.coords[0]
    if isinstance(coord, Generic):
        expected = []
    elif coord.alpha >= 0:
        expected = [('y1', (coord.alpha + 1,))]
    else:
        expected = [('x1', (coord.alpha,))]
    report.record(f"missing edges are {expected}", missing == expected, str(missing))
    return report.finish()


def acceptance_family(n: int, integral_range: int = 2, generic_range: int = 1,
                      symbols: int = 2) -> List[Character]:
    """Integral alpha in [-2, 2] and Generic(t, alpha), t <= 2, alpha in [-1, 1], per coordinate"""
    coords = [Integral(a) for a in range(-integral_range, integral_range + 1)]
    coords += [Generic(t, a) for t in range(1, symbols + 1) for a in range(-generic_range, generic_range + 1)]
    return [Character(tuple(combo)) for combo in cartesian(coords, repeat=n)]


def oracle_weight_set(ctx: ParamContext, phi: Character, bound: int) -> FrozenSet[Character]:
    """Weights of S_phi with every exponent in [-bound, bound], from window reachability"""
    spec = ModuleSpec(ctx, phi, ModuleKind.S)
    radius = max((abs(c.alpha) for c in phi.coords), default=0) + bound + 3
    reach = reaching_set(spec, radius)
    weights = set()
    for k in reach:
        weight = act(k, phi)
        if all(abs(c.alpha) <= bound for c in weight.coords):
            weights.add(weight)
    return frozenset(weights)


def classification_check(ctx: ParamContext, characters: Optional[Iterable[Character]] = None,
                         bound: int = 2) -> CheckReport:
    """isomorphic_S against equality of oracle weight sets, pair by pair"""
    family = list(characters) if characters is not None else acceptance_family(ctx.n, symbols=ctx.generic_symbols)
    report = CheckReport('classification', {**ctx.describe(), 'characters': len(family), 'bound': bound})
    weight_sets: Dict[Character, FrozenSet[Character]] = {
        phi: oracle_weight_set(ctx, phi, bound) for phi in family
    }
    disagreements = []
    for a, phi in enumerate(family):
        for psi in family[a:]:
            if isomorphic_S(phi, psi) != (weight_sets[phi] == weight_sets[psi]):
                disagreements.append((phi, psi))
    pairs = len(family) * (len(family) + 1) // 2
    report.record(f"isomorphic_S agrees with weight sets on {pairs} pairs", not disagreements,
                  None if not disagreements else
                  f"{format_character(disagreements[0][0])} vs {format_character(disagreements[0][1])}")

    groups = fibres(family)
    oracle_classes = len(set(weight_sets.values()))
    report.record('one class per distinct weight set', len(groups) == oracle_classes,
                  f"{len(groups)} classes, {oracle_classes} weight sets")
    for key, members in groups.items():
        report.note(f"{key}: {', '.join(format_character(phi) for phi in members)}")
    return report.finish()


def module_suites(spec: ModuleSpec, radius: int, samples: int,
                  rng: Optional[random.Random] = None) -> CheckReport:
    """The window suites the CLI runs under module-check"""
    rng = rng or get_rng()
    report = CheckReport('module-check', {**spec.describe(), 'radius': radius, 'samples': samples})
    report.extend(module_axiom_check(spec, max(radius, 3), samples, rng), prefix='axiom: ')
    report.extend(weight_decomposition_check(spec, radius, samples, rng), prefix='weights: ')
    report.extend(submodule_check(spec, radius), prefix='submodule: ')
    report.extend(oracle_equivalence_check(spec, max(radius, oracle_radius(spec.phi))), prefix='oracle: ')
    report.extend(simplicity_check(spec), prefix='simplicity: ')
    if spec.n == 1:
        report.extend(structure_check(spec, max(radius, oracle_radius(spec.phi))), prefix='structure: ')
    report.extend(classification_check(spec.ctx, [spec.phi] + [_reflect(spec.phi)]), prefix='classes: ')
    logger.info(f"Module suites for {format_character(spec.phi)}: {report.summary()}")
    return report.finish()


def _reflect(phi: Character) -> Character:
    """Move every integral coordinate across its wall"""
    return Character(tuple(Integral(-c.alpha - 1) if isinstance(c, Integral) else c for c in phi.coords))


def kappa_table(characters: Iterable[Character]) -> Dict[str, List[str]]:
    return {str(key): [format_character(phi) for phi in members] for key, members in fibres(characters).items()}
