"""
Isomorphism from the localized AJ algebra to the localized Maltsiniotis algebra

    y_i -> y_i,  x_i -> z_{i-1}^-1 x_i,  z_i -> z_{i-1}^-1 z_i   (z_0 = 1)
"""

from typing import Dict

from algebras.presentations import (Family, Letter, NormalElement, NormalMonomial, PresentationId,
                                    generator, multiply, unit_vector, zero_vector)
from core.errors import PresentationMismatch


def theta_target(p: PresentationId) -> PresentationId:
    return PresentationId(Family.MALTSINIOTIS, True, p.ctx)


def theta_generator(target: PresentationId, letter: Letter) -> NormalElement:
    kind, i, power = letter
    n = target.n
    if kind == 'y':
        return generator(target, letter)
    shift = unit_vector(n, i - 1, -1) if i > 1 else zero_vector(n)
    if kind == 'x':
        return multiply(NormalElement.monomial(target, NormalMonomial(zero_vector(n), shift)),
                        generator(target, letter))
    m = tuple(power * (a + b) for a, b in zip(unit_vector(n, i), shift))
    return NormalElement.monomial(target, NormalMonomial(zero_vector(n), m))


def theta(a: NormalElement) -> NormalElement:
    """
    Image of an AJ-B element in Malt-B normal form

    Raises:
        PresentationMismatch: if a is not in the localized AJ presentation
    """
    p = a.presentation
    if p.family is not Family.AJ or not p.localized:
        raise PresentationMismatch(f"theta is defined on AJ-B, got {p.label}")
    target = theta_target(p)
    images: Dict[Letter, NormalElement] = {}
    result = NormalElement.zero(target)
    for mono, coeff in a.terms.items():
        value = NormalElement.one(target)
        for letter in mono.word():
            if letter not in images:
                images[letter] = theta_generator(target, letter)
            value = multiply(value, images[letter])
        result = result + value.scale(coeff)
    return result
