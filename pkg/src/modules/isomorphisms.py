"""
Shift isomorphism P_{e_l . phi} -> P_phi

w_k is sent to mu_k v_{k+e_l}. Intertwining the x-actions forces
    mu_k = mu_{k+e_l}                                  if k_l != -1
    mu_k = (phi(z_l) - 1)/(q_l - 1) mu_{k+e_l}        if k_l == -1
    mu_k = mu_{k+e_i}                                  for i < l
    mu_k = l_il^-1 mu_{k+e_i}                          for i > l
The family is anchored at mu_0 = 1 and propagated over the window.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from algebras.presentations import Vector, add_vectors, unit_vector
from core.characters import Character, act, box, format_character, value
from core.report import CheckReport
from core.scalars import ParamContext, Scalar, format_scalar, scalars_equal
from modules.weight_module import ModuleSpec, action_coefficient, letters_of

logger = logging.getLogger(__name__)


@dataclass
class ShiftIsomorphism:
    axis: int
    scalars: Dict[Vector, Scalar] = field(default_factory=dict)
    conflicts: List[Tuple[Vector, Vector]] = field(default_factory=list)
    report: CheckReport = None


def _inside(k: Vector, radius: int) -> bool:
    return all(-radius <= x <= radius for x in k)


def shift_iso_scalars(ctx: ParamContext, ell: int, phi: Character, radius: int) -> ShiftIsomorphism:
    """
    Solve for mu on [-radius, radius]^n and verify the intertwining on the interior

    When phi(z_l) = 1 the map exists but is not injective: the report carries
    a failed entry and no scalars are solved for.
    """
    n = ctx.n
    report = CheckReport('shift-iso', {
        **ctx.describe(), 'axis': ell, 'phi': format_character(phi), 'radius': radius,
    })
    phi_l = value(ctx, phi, ell)
    degenerate = scalars_equal(phi_l, ctx.one)
    report.record(f"phi(z{ell}) != 1", not degenerate,
                  f"phi(z{ell}) = 1: the shift map exists but is not injective" if degenerate else None)
    if degenerate:
        logger.warning(f"Degenerate axis {ell} for {format_character(phi)}: shift map not injective")
        return ShiftIsomorphism(ell, report=report.finish())

    wall = (phi_l - 1) / (ctx.q(ell) - 1)

    def ratio(i: int, k: Vector) -> Scalar:
        """mu_{k+e_i} / mu_k"""
        if i == ell:
            return ctx.one / wall if k[ell - 1] == -1 else ctx.one
        if i < ell:
            return ctx.one
        return ctx.lam(i, ell)

    result = ShiftIsomorphism(ell)
    origin = (0,) * n
    mu = {origin: ctx.one}
    queue = deque([origin])
    while queue:
        k = queue.popleft()
        for i in range(1, n + 1):
            up = add_vectors(k, unit_vector(n, i))
            down = add_vectors(k, unit_vector(n, i, -1))
            for neighbour, candidate in ((up, mu[k] * ratio(i, k)), (down, mu[k] / ratio(i, down))):
                if not _inside(neighbour, radius):
                    continue
                if neighbour not in mu:
                    mu[neighbour] = candidate
                    queue.append(neighbour)
                elif not scalars_equal(mu[neighbour], candidate):
                    result.conflicts.append((k, neighbour))
    result.scalars = mu

    report.record('mu_0 = 1', scalars_equal(mu[origin], ctx.one))
    report.record('conditions consistent on window', not result.conflicts,
                  None if not result.conflicts else f"conflict between {result.conflicts[0]}")
    if result.conflicts:
        logger.warning(f"{len(result.conflicts)} propagation conflicts in shift isomorphism")

    source = ModuleSpec(ctx, act(unit_vector(n, ell), phi))
    target = ModuleSpec(ctx, phi)
    shift = unit_vector(n, ell)
    interior = list(box(n, radius - 1))
    for letter in letters_of(n):
        witness = None
        for k in interior:
            src_target, src_coeff = action_coefficient(source, letter, k)
            dst_target, dst_coeff = action_coefficient(target, letter, add_vectors(k, shift))
            if dst_target != add_vectors(src_target, shift):
                witness = f"k={k}: index mismatch"
                break
            lhs = src_coeff * mu[src_target]
            rhs = mu[k] * dst_coeff
            if not scalars_equal(lhs, rhs):
                witness = f"k={k}: {format_scalar(lhs)} != {format_scalar(rhs)}"
                break
        kind, i, power = letter
        name = f"{kind}{i}" + ('' if power == 1 else '^-1')
        report.record(f"{name} intertwines", witness is None, witness)
    report.note(f"verified on interior radius {radius - 1} (margin 1)")
    result.report = report.finish()
    return result
