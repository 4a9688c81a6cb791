"""
Window comparisons of module structures

tensor_compare: P_phi against the tensor product of the rank-one P_{phi_i}
(trivial skew matrix only). twist_module_compare: the directly defined module
with the full skew matrix against the twist of the trivial-matrix module,
matched by v_k -> v_k.
"""

import logging
from typing import List, Tuple

from algebras.presentations import Letter, Vector, add_vectors, unit_vector
from core.characters import Character, box, coordinate_value, format_character, tensor_factor
from core.errors import LambdaModeMismatch
from core.report import CheckReport
from core.scalars import LambdaMode, ParamContext, Scalar, format_scalar, scalars_equal
from modules.classification import descriptor_of, weight_support
from modules.weight_module import (ModuleKind, ModuleSpec, Realization, action_coefficient, axis_factor,
                                   in_nphi, letters_of, vectors_in, weight_of)

logger = logging.getLogger(__name__)


def _projected(spec: ModuleSpec, letter: Letter, k: Vector) -> Tuple[Vector, Scalar]:
    target, coeff = action_coefficient(spec, letter, k)
    if spec.kind is ModuleKind.S and in_nphi(spec, target):
        return target, spec.ctx.zero
    return target, coeff


def _letter_name(letter: Letter) -> str:
    kind, i, power = letter
    return f"{kind}{i}" + ('' if power == 1 else '^-1')


def _tensor_coefficient(ctx: ParamContext, factor_specs: List[ModuleSpec], letter: Letter,
                        k: Vector) -> Tuple[Vector, Scalar]:
    """Action on v_k1 (x) ... (x) v_kn; with trivial skew matrix g_i only touches factor i"""
    kind, i, power = letter
    factor = factor_specs[i - 1]
    phi_i = coordinate_value(ctx, factor.phi.coords[0], i)
    q = ctx.q(i)
    ki = k[i - 1]
    if kind == 'z':
        return k, (q ** -ki * phi_i) ** power
    step = 1 if kind == 'x' else -1
    target = add_vectors(k, unit_vector(ctx.n, i, step))
    coeff = axis_factor(q, phi_i, kind, ki)
    if factor.kind is ModuleKind.S and in_nphi(factor, (target[i - 1],)):
        coeff = ctx.zero
    return target, coeff


def tensor_compare(ctx: ParamContext, phi: Character, radius: int,
                   kind: ModuleKind = ModuleKind.P) -> CheckReport:
    """
    Structure constants of P_phi (or S_phi) against the factorwise action

    Raises:
        LambdaModeMismatch: unless every skew entry is 1
    """
    if ctx.lambda_mode is not LambdaMode.ALL_ONES:
        raise LambdaModeMismatch("Tensor decomposition is stated for the trivial skew matrix")

    spec = ModuleSpec(ctx, phi, kind)
    rank_one = ParamContext(1, LambdaMode.ALL_ONES, generic_symbols=ctx.generic_symbols)
    factor_specs = [ModuleSpec(rank_one, factor, kind) for factor in tensor_factor(phi)]
    report = CheckReport('tensor-check', {**spec.describe(), 'radius': radius})

    points = vectors_in(spec, box(ctx.n, radius))
    for letter in letters_of(ctx.n):
        witness = None
        for k in points:
            target, coeff = _projected(spec, letter, k)
            t_target, t_coeff = _tensor_coefficient(ctx, factor_specs, letter, k)
            if target != t_target or not scalars_equal(coeff, t_coeff):
                witness = f"k={k}: {format_scalar(coeff)} != {format_scalar(t_coeff)}"
                break
        report.record(f"{_letter_name(letter)} structure constants", witness is None, witness)

    if kind is ModuleKind.S:
        witness = None
        for k in box(ctx.n, radius):
            in_module = not in_nphi(spec, k)
            in_product = all(not in_nphi(f, (ki,)) for f, ki in zip(factor_specs, k))
            if in_module != in_product:
                witness = f"k={k}"
                break
        report.record('support equals product of factor supports', witness is None, witness)

        product_entries = tuple(descriptor_of(f.phi).entries[0] for f in factor_specs)
        descriptor = weight_support(spec)
        report.record(f"descriptor {descriptor} equals factor descriptors",
                      descriptor.entries == product_entries)

    report.note(f"window radius {radius}, {len(points)} basis vectors")
    return report.finish()


def twist_module_compare(lam_ctx: ParamContext, phi: Character, radius: int,
                         kind: ModuleKind = ModuleKind.P) -> CheckReport:
    """v_k -> v_k intertwines the twisted trivial-matrix action with the direct action"""
    direct = ModuleSpec(lam_ctx, phi, kind, Realization.DIRECT)
    twisted = ModuleSpec(lam_ctx, phi, kind, Realization.TWIST)
    untwisted = ModuleSpec(lam_ctx.with_lambda_mode(LambdaMode.ALL_ONES), phi, kind)
    report = CheckReport('twist-module-compare', {**direct.describe(), 'radius': radius})

    points = vectors_in(direct, box(lam_ctx.n, radius))
    for letter in letters_of(lam_ctx.n):
        witness = None
        for k in points:
            d_target, d_coeff = _projected(direct, letter, k)
            t_target, t_coeff = _projected(twisted, letter, k)
            if d_target != t_target or not scalars_equal(d_coeff, t_coeff):
                witness = f"k={k}: {format_scalar(d_coeff)} != {format_scalar(t_coeff)}"
                break
        report.record(f"{_letter_name(letter)} intertwined by v_k -> v_k", witness is None, witness)

    direct_weights = {weight_of(direct, k) for k in points}
    twisted_weights = {weight_of(twisted, k) for k in vectors_in(twisted, box(lam_ctx.n, radius))}
    untwisted_weights = {weight_of(untwisted, k) for k in vectors_in(untwisted, box(lam_ctx.n, radius))}
    report.record('weights of twisted module equal weights of direct module',
                  direct_weights == twisted_weights)
    report.record('twisting leaves the weight set unchanged', twisted_weights == untwisted_weights)
    if kind is ModuleKind.S:
        report.record('support descriptor unchanged by twisting',
                      weight_support(direct) == weight_support(twisted) == weight_support(untwisted))

    report.note(f"window radius {radius}; phi = {format_character(phi)}")
    return report.finish()
