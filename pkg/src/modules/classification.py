"""
Classification of simple weight modules in the generic case

Each coordinate of a character falls in one of three classes:
    FullOrbit(t)    phi(z_i) = c_t q_i^a       every k_i is in the support of S_phi
    LowerRay(a)     phi(z_i) = q_i^a, a >= 0   support k_i <= a, weights are q_i^N
    UpperRay(a)     phi(z_i) = q_i^a, a < 0    support k_i >= a+1, weights are q_i^(-N*)

Two simple quotients are isomorphic iff they have the same set of weights,
which depends on the class of each coordinate but not on a.
"""

from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union

from core.characters import Character, Coordinate, Generic, complexity, same_orbit
from core.errors import RankNotOne, SpecMismatch
from modules.weight_module import ModuleKind, ModuleSpec


@dataclass(frozen=True)
class FullOrbit:
    t: int

    def key(self) -> Tuple:
        return ('orbit', self.t)


@dataclass(frozen=True)
class LowerRay:
    alpha: int

    def key(self) -> Tuple:
        return ('lower',)


@dataclass(frozen=True)
class UpperRay:
    alpha: int

    def key(self) -> Tuple:
        return ('upper',)


DescriptorEntry = Union[FullOrbit, LowerRay, UpperRay]


@dataclass(frozen=True)
class WeightSetDescriptor:
    entries: Tuple[DescriptorEntry, ...]

    def key(self) -> Tuple:
        """The weight set itself: the class of each coordinate without its wall position"""
        return tuple(entry.key() for entry in self.entries)

    def contains(self, k: Tuple[int, ...]) -> bool:
        """k indexes a basis vector of S_phi"""
        for entry, ki in zip(self.entries, k):
            if isinstance(entry, LowerRay) and ki > entry.alpha:
                return False
            if isinstance(entry, UpperRay) and ki <= entry.alpha:
                return False
        return True

    def support_text(self) -> str:
        parts = []
        for i, entry in enumerate(self.entries, start=1):
            if isinstance(entry, LowerRay):
                parts.append(f"k{i} ≤ {entry.alpha}")
            elif isinstance(entry, UpperRay):
                parts.append(f"k{i} ≥ {entry.alpha + 1}")
            else:
                parts.append(f"k{i} ∈ Z")
        return ', '.join(parts)

    def weights_text(self) -> str:
        parts = []
        for i, entry in enumerate(self.entries, start=1):
            if isinstance(entry, LowerRay):
                parts.append(f"q{i}^N")
            elif isinstance(entry, UpperRay):
                parts.append(f"q{i}^-N*")
            else:
                parts.append(f"c{entry.t}*q{i}^Z")
        return ' x '.join(parts)

    def __str__(self) -> str:
        return ' x '.join(
            f"FullOrbit({e.t})" if isinstance(e, FullOrbit) else f"{type(e).__name__}({e.alpha})"
            for e in self.entries
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            'descriptor': str(self),
            'support': self.support_text(),
            'weights': self.weights_text(),
        }


def descriptor_entry(coord: Coordinate) -> DescriptorEntry:
    if isinstance(coord, Generic):
        return FullOrbit(coord.t)
    if coord.alpha >= 0:
        return LowerRay(coord.alpha)
    return UpperRay(coord.alpha)


def descriptor_of(phi: Character) -> WeightSetDescriptor:
    return WeightSetDescriptor(tuple(descriptor_entry(coord) for coord in phi.coords))


def weight_support(spec: ModuleSpec) -> WeightSetDescriptor:
    """
    Support descriptor of S_phi

    Raises:
        SpecMismatch: for P-kind specs, whose support is all of Z^n
    """
    if spec.kind is not ModuleKind.S:
        raise SpecMismatch("weight_support describes simple quotients; P_phi is supported on all of Z^n")
    return descriptor_of(spec.phi)


def is_simple_P(phi: Character) -> bool:
    return not complexity(phi)


def kappa_class(phi: Character) -> Tuple:
    """Isomorphism-class key of S_phi"""
    return descriptor_of(phi).key()


def isomorphic_S(phi: Character, psi: Character) -> bool:
    if phi.n != psi.n:
        return False
    return kappa_class(phi) == kappa_class(psi)


def isomorphic_P_rank1(phi: Character, psi: Character) -> bool:
    """
    P_phi and P_psi are isomorphic iff the orbits agree and, on the orbit of
    the trivial character, both lie on the same side of the wall

    Raises:
        RankNotOne: for characters of rank other than 1
    """
    if phi.n != 1 or psi.n != 1:
        raise RankNotOne("The classification of the P_phi is available in rank 1 only")
    if not same_orbit(phi, psi):
        return False
    a, b = phi.coords[0], psi.coords[0]
    if isinstance(a, Generic):
        return True
    return (a.alpha >= 0) == (b.alpha >= 0)


def fibres(characters: Iterable[Character]) -> Dict[Tuple, List[Character]]:
    """Group characters by the isomorphism class of their simple quotient"""
    groups: Dict[Tuple, List[Character]] = OrderedDict()
    for phi in characters:
        groups.setdefault(kappa_class(phi), []).append(phi)
    return groups
