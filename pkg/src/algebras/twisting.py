"""
Twisting system on the AJ algebra with trivial skew matrix

tau_i rescales x_j by l_ij^-1 and y_j by l_ij whenever i < j and fixes
everything else, so tau_g is diagonal on the PBW basis. The twisted product
a * b = tau_deg(b)(a) b recovers the AJ algebra with the full matrix.
"""

import logging
from typing import Sequence

from algebras.presentations import Family, NormalElement, PresentationId, multiply
from core.errors import ModeMismatch
from core.scalars import LambdaMode, ParamContext, Scalar

logger = logging.getLogger(__name__)


def twist_scalar(lam_ctx: ParamContext, g: Sequence[int], degree: Sequence[int]) -> Scalar:
    """prod over i<j of l_ij^(-g_i * degree_j)"""
    result = lam_ctx.one
    n = lam_ctx.n
    for i in range(1, n + 1):
        if not g[i - 1]:
            continue
        for j in range(i + 1, n + 1):
            exponent = -g[i - 1] * degree[j - 1]
            if exponent:
                result *= lam_ctx.lam(i, j) ** exponent
    return result


def _require_trivial_matrix(p: PresentationId, lam_ctx: ParamContext):
    if p.family is not Family.AJ:
        raise ModeMismatch(f"Twisting acts on the AJ presentations, got {p.label}")
    if p.ctx.lambda_mode is not LambdaMode.ALL_ONES:
        raise ModeMismatch("Twisting acts on the algebra with all skew entries equal to 1")
    if lam_ctx.n != p.n or lam_ctx.generic_symbols != p.ctx.generic_symbols:
        raise ModeMismatch("Skew matrix context does not match the element's rank")


def untwisted_presentation(p: PresentationId) -> PresentationId:
    """Same presentation with all skew entries equal to 1"""
    return p.with_ctx(p.ctx.with_lambda_mode(LambdaMode.ALL_ONES))


def tau_apply(g: Sequence[int], a: NormalElement, lam_ctx: ParamContext) -> NormalElement:
    """
    Apply tau_g = tau_1^g1 ... tau_n^gn to an element of the untwisted algebra

    Raises:
        ModeMismatch: if a is not in an AJ presentation with trivial skew matrix
    """
    p = a.presentation
    _require_trivial_matrix(p, lam_ctx)
    terms = {}
    for mono, coeff in a.terms.items():
        terms[mono] = coeff * twist_scalar(lam_ctx, g, mono.degree())
    return NormalElement(p, terms)


def twist_product(a: NormalElement, b: NormalElement, lam_ctx: ParamContext) -> NormalElement:
    """a * b = sum over homogeneous components b_g of tau_g(a) b_g"""
    p = a.presentation
    _require_trivial_matrix(p, lam_ctx)
    a._check(b)
    result = NormalElement.zero(p)
    for degree, component in b.homogeneous_components().items():
        result = result + multiply(tau_apply(degree, a, lam_ctx), component)
    return result

