"""
Algebra verification suites
Relations, associativity, theta, twisting and the strongly-free basis
"""

import logging
import random
from typing import Dict, Iterable, List, Optional

from sympy.polys.matrices import DomainMatrix

from algebras.presentations import (Family, Identity, Letter, NormalElement, NormalMonomial, PresentationId,
                                    add_vectors, check_relations, defining_identities, evaluate_identity,
                                    generator, multiply, unit_vector, z_element, zero_vector)
from algebras.theta import theta, theta_generator, theta_target
from algebras.twisting import tau_apply, twist_product, untwisted_presentation
from core.characters import box
from core.errors import ModeMismatch
from core.report import CheckReport
from core.scalars import LambdaMode, ParamContext
from validators.sampling import get_rng, random_element, random_shift

logger = logging.getLogger(__name__)

ALL_PRESENTATIONS = [(Family.AJ, False), (Family.AJ, True),
                     (Family.MALTSINIOTIS, False), (Family.MALTSINIOTIS, True)]


def presentations_for(ctx: ParamContext) -> List[PresentationId]:
    return [PresentationId(family, localized, ctx) for family, localized in ALL_PRESENTATIONS]


def relations_suite(ctx: ParamContext) -> CheckReport:
    """check_relations over all four presentations of one rank"""
    report = CheckReport('relations-suite', ctx.describe())
    for p in presentations_for(ctx):
        report.extend(check_relations(p), prefix=f"{p.label}: ")
    return report.finish()


def associativity_check(p: PresentationId, samples: int = 200, max_degree: int = 3,
                        rng: Optional[random.Random] = None) -> CheckReport:
    """(ab)c = a(bc) on random triples"""
    rng = rng or get_rng()
    report = CheckReport('associativity', {**p.describe(), 'samples': samples, 'max_degree': max_degree})
    failures = 0
    for index in range(samples):
        a, b, c = (random_element(p, rng, max_degree=max_degree) for _ in range(3))
        left = multiply(multiply(a, b), c)
        right = multiply(a, multiply(b, c))
        if left != right:
            failures += 1
            report.record(f"triple {index}", False, f"a={a}; b={b}; c={c}")
    report.record(f"{samples} random triples associate", failures == 0,
                  None if not failures else f"{failures} failing triples")
    logger.info(f"Associativity in {p.label}: {samples - failures}/{samples} triples")
    return report.finish()


def _small_monomials(n: int) -> List[NormalMonomial]:
    """b_k z^m with |k|_1 <= 1 and |m|_1 <= 1"""
    vectors = [zero_vector(n)]
    for i in range(1, n + 1):
        vectors += [unit_vector(n, i), unit_vector(n, i, -1)]
    return [NormalMonomial(k, m) for k in vectors for m in vectors]


def theta_check(ctx: ParamContext) -> CheckReport:
    """
    theta sends every AJ-B identity to zero in Malt-B, and the images of the
    small normal monomials are linearly independent
    """
    source = PresentationId(Family.AJ, True, ctx)
    target = theta_target(source)
    report = CheckReport('theta-check', {**source.describe(), 'target': target.label})

    images: Dict[Letter, NormalElement] = {}

    def image(letter: Letter) -> NormalElement:
        if letter not in images:
            images[letter] = theta_generator(target, letter)
        return images[letter]

    unit = NormalElement.one(target)
    for identity in defining_identities(source):
        value = evaluate_identity(identity, image, multiply, unit)
        report.record(f"theta({identity.name}) = 0", value.is_zero(), None if value.is_zero() else str(value))

    monomials = _small_monomials(ctx.n)
    rows = [theta(NormalElement.monomial(source, mono)) for mono in monomials]
    columns = sorted({mono for row in rows for mono in row.terms})
    domain = ctx.field.to_domain()
    matrix = DomainMatrix([[row.coefficient(mono) for mono in columns] for row in rows],
                          (len(rows), len(columns)), domain)
    rank = matrix.rank()
    report.record(f"images of {len(monomials)} basis monomials are independent", rank == len(monomials),
                  None if rank == len(monomials) else f"rank {rank}")
    return report.finish()


def twist_check(lam_ctx: ParamContext, samples: int = 50,
                rng: Optional[random.Random] = None) -> CheckReport:
    """
    The defining identities of the AJ algebra with skew matrix lam_ctx hold in
    the trivial-matrix algebra under the twisted product, and tau is a group
    action by algebra automorphisms
    """
    if lam_ctx.lambda_mode is LambdaMode.ALL_ONES:
        logger.warning("Twist check with the trivial skew matrix only compares the algebra with itself")
    rng = rng or get_rng()
    report = CheckReport('twist-check', {**lam_ctx.describe(), 'samples': samples})
    n = lam_ctx.n

    for localized in (False, True):
        twisted = PresentationId(Family.AJ, localized, lam_ctx)
        ones = untwisted_presentation(twisted)

        def product(a: NormalElement, b: NormalElement) -> NormalElement:
            return twist_product(a, b, lam_ctx)

        def image(letter: Letter) -> NormalElement:
            if letter[0] == 'z' and letter[2] == 1:
                return z_element(ones, letter[1])
            return generator(ones, letter)

        unit = NormalElement.one(ones)
        for identity in defining_identities(twisted):
            value = evaluate_identity(identity, image, product, unit)
            report.record(f"{twisted.label} twisted: {identity.name}", value.is_zero(),
                          None if value.is_zero() else str(value))

    ones = untwisted_presentation(PresentationId(Family.AJ, True, lam_ctx))
    unit = NormalElement.one(ones)
    action_failures = automorphism_failures = 0
    for _ in range(samples):
        g, h = random_shift(n, rng), random_shift(n, rng)
        a = random_element(ones, rng)
        if tau_apply(g, tau_apply(h, a, lam_ctx), lam_ctx) != tau_apply(add_vectors(g, h), a, lam_ctx):
            action_failures += 1
        b = random_element(ones, rng)
        if tau_apply(g, multiply(a, b), lam_ctx) != multiply(tau_apply(g, a, lam_ctx), tau_apply(g, b, lam_ctx)):
            automorphism_failures += 1
    report.record('tau_0 is the identity', tau_apply(zero_vector(n), unit, lam_ctx) == unit)
    report.record(f"tau_g tau_h = tau_(g+h) on {samples} samples", action_failures == 0,
                  None if not action_failures else f"{action_failures} failures")
    report.record(f"tau_g(ab) = tau_g(a) tau_g(b) on {samples} samples", automorphism_failures == 0,
                  None if not automorphism_failures else f"{automorphism_failures} failures")
    return report.finish()


def _require_aj_b(p: PresentationId):
    if p.family is not Family.AJ or not p.localized:
        raise ModeMismatch(f"Closed forms on b_k are stated for AJ-B, got {p.label}")


def _b(p: PresentationId, k, m=None, coeff=None) -> NormalElement:
    return NormalElement.monomial(p, NormalMonomial(tuple(k), m or zero_vector(p.n)), coeff)


def _lambda_product(ctx: ParamContext, i: int, k) -> object:
    result = ctx.one
    for j in range(1, i):
        if k[j - 1]:
            result *= ctx.lam(i, j) ** k[j - 1]
    return result


def basis_action_check(p: PresentationId, radius: int = 2) -> CheckReport:
    """
    x_i b_k and y_i b_k from the rewrite engine against their closed forms

    Raises:
        ModeMismatch: outside AJ-B
    """
    _require_aj_b(p)
    ctx = p.ctx
    n = p.n
    report = CheckReport('basis-action', {**p.describe(), 'radius': radius})
    points = list(box(n, radius))
    for i in range(1, n + 1):
        q = ctx.q(i)
        e = unit_vector(n, i)
        x_witness = y_witness = None
        for k in points:
            lam = _lambda_product(ctx, i, k)
            up = add_vectors(k, e)
            if k[i - 1] >= 0:
                expected = _b(p, up, coeff=lam)
            else:
                expected = (_b(p, up, e, q ** -k[i - 1]) - _b(p, up)).scale(lam / (q - 1))
            if x_witness is None and multiply(generator(p, ('x', i, 1)), _b(p, k)) != expected:
                x_witness = f"k={k}"

            down = add_vectors(k, unit_vector(n, i, -1))
            if k[i - 1] <= 0:
                expected = _b(p, down, coeff=ctx.one / lam)
            else:
                expected = (_b(p, down, e, q ** (1 - k[i - 1])) - _b(p, down)).scale(ctx.one / (lam * (q - 1)))
            if y_witness is None and multiply(generator(p, ('y', i, 1)), _b(p, k)) != expected:
                y_witness = f"k={k}"
        report.record(f"x{i} b_k closed form", x_witness is None, x_witness)
        report.record(f"y{i} b_k closed form", y_witness is None, y_witness)
    return report.finish()


def strongly_free_check(p: PresentationId, radius: int = 2) -> CheckReport:
    """z_i^(+-1) b_k = b_k sigma_k(z_i^(+-1)) with sigma_k(z_i) = q_i^-k_i z_i"""
    _require_aj_b(p)
    ctx = p.ctx
    n = p.n
    report = CheckReport('strongly-free', {**p.describe(), 'radius': radius})
    points = list(box(n, radius))
    for i in range(1, n + 1):
        for power in (1, -1):
            witness = None
            for k in points:
                lhs = multiply(generator(p, ('z', i, power)), _b(p, k))
                rhs = _b(p, k, unit_vector(n, i, power), ctx.q(i) ** (-power * k[i - 1]))
                if lhs != rhs:
                    witness = f"k={k}: {lhs}"
                    break
            name = f"z{i}" if power == 1 else f"z{i}^-1"
            report.record(f"{name} b_k = b_k sigma_k({name})", witness is None, witness)
    return report.finish()


def run_algebra_suites(ctx: ParamContext, samples: int, presentations: Iterable[PresentationId] = (),
                       rng: Optional[random.Random] = None) -> CheckReport:
    """Every algebra-level check for one context (the algebra-check command)"""
    rng = rng or get_rng()
    report = CheckReport('algebra-suites', {**ctx.describe(), 'samples': samples})
    report.extend(relations_suite(ctx))
    for p in presentations or presentations_for(ctx):
        report.extend(associativity_check(p, samples, rng=rng), prefix=f"{p.label}: ")
    report.extend(theta_check(ctx))
    aj_b = PresentationId(Family.AJ, True, ctx)
    report.extend(basis_action_check(aj_b))
    report.extend(strongly_free_check(aj_b))
    return report.finish()
