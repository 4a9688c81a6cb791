"""
Weight module tests: actions, N_phi, graphs
"""

import pytest

from algebras.presentations import generator, multiply
from core.characters import Character, Generic, Integral, parse_character, trivial_character
from core.errors import ConfigurationError, SpecMismatch, WindowTooSmall
from core.scalars import ParamContext, scalars_equal
from modules.weight_module import (ModuleKind, ModuleSpec, Realization, WeightVector, act_element, act_gen,
                                   action_coefficient, action_graph, graph_regions, in_nphi, nphi_oracle,
                                   reaching_set, weight_multiplicities, weight_of)
from validators.module_checks import (module_axiom_check, oracle_equivalence_check, simplicity_check,
                                      structure_check, submodule_check, weight_decomposition_check)


@pytest.fixture
def p_q2(ctx1):
    return ModuleSpec(ctx1, parse_character('[q^2]'))


def test_spec_validation(ctx1, ctx2):
    with pytest.raises(SpecMismatch):
        ModuleSpec(ctx2, parse_character('[q]'))
    with pytest.raises(ConfigurationError):
        ModuleSpec(ParamContext(1, generic_symbols=1), parse_character('[c2]'))


def test_nphi_membership(ctx1):
    lower = ModuleSpec(ctx1, parse_character('[q^2]'), ModuleKind.S)
    upper = ModuleSpec(ctx1, parse_character('[q^-2]'), ModuleKind.S)
    generic = ModuleSpec(ctx1, parse_character('[c1*q^3]'), ModuleKind.S)
    assert [in_nphi(lower, (k,)) for k in (1, 2, 3, 4)] == [False, False, True, True]
    assert [in_nphi(upper, (k,)) for k in (-3, -2, -1, 0)] == [True, True, False, False]
    assert not any(in_nphi(generic, (k,)) for k in range(-5, 6))


def test_rank_one_coefficients(p_q2, ctx1):
    q = ctx1.q(1)
    target, coeff = action_coefficient(p_q2, ('y', 1, 1), (3,))
    assert target == (2,) and not coeff
    target, coeff = action_coefficient(p_q2, ('x', 1, 1), (-1,))
    assert target == (0,) and scalars_equal(coeff, (q ** 3 - 1) / (q - 1))
    target, coeff = action_coefficient(p_q2, ('z', 1, -1), (1,))
    assert target == (1,) and scalars_equal(coeff, ctx1.one / q)


def test_quotient_vectors_drop_nphi(ctx1):
    spec = ModuleSpec(ctx1, parse_character('[q^2]'), ModuleKind.S)
    assert WeightVector.basis(spec, (3,)).is_zero()
    v = WeightVector.basis(spec, (2,))
    assert not v.is_zero()
    # x1 sends v_2 into N_phi
    assert act_gen(spec, ('x', 1, 1), v).is_zero()


def test_z_acts_by_the_weight(ctx2):
    spec = ModuleSpec(ctx2, Character((Generic(1, 1), Integral(-1))))
    v = WeightVector.basis(spec, (2, -3))
    weight = weight_of(spec, (2, -3))
    assert weight == Character((Generic(1, -1), Integral(2)))
    for i in (1, 2):
        acted = act_gen(spec, ('z', i, 1), v)
        assert scalars_equal(acted.coefficient((2, -3)), ctx2.q(i) ** weight.coords[i - 1].alpha *
                             (ctx2.c(1) if i == 1 else ctx2.one))


def test_act_element_matches_letters(ctx2):
    spec = ModuleSpec(ctx2, parse_character('[q, c1]'))
    p = spec.algebra()
    v = WeightVector.basis(spec, (-1, 2)) + WeightVector.basis(spec, (0, 0), 3)
    element = multiply(generator(p, ('x', 1, 1)), generator(p, ('y', 2, 1)))
    assert act_element(spec, element, v) == act_gen(spec, ('x', 1, 1), act_gen(spec, ('y', 2, 1), v))


def test_vectors_from_other_specs_are_rejected(ctx1):
    a = ModuleSpec(ctx1, parse_character('[q]'))
    b = ModuleSpec(ctx1, parse_character('[q^2]'))
    with pytest.raises(SpecMismatch):
        act_gen(a, ('x', 1, 1), WeightVector.basis(b, (0,)))
    with pytest.raises(SpecMismatch):
        WeightVector.basis(a, (0,)) + WeightVector.basis(b, (0,))


def test_oracle(p_q2):
    assert nphi_oracle(p_q2, (3,), 6)
    assert not nphi_oracle(p_q2, (-4,), 6)
    assert not nphi_oracle(p_q2, (2,), 6)
    with pytest.raises(WindowTooSmall):
        nphi_oracle(p_q2, (0,), 3)
    assert reaching_set(p_q2, 6) == {(k,) for k in range(-6, 3)}


def test_rank_one_graphs(ctx1):
    for text in ('[q^2]', '[q^-2]', '[c1]', '[1]'):
        assert structure_check(ModuleSpec(ctx1, parse_character(text)), radius=4).passed

    graph = action_graph(ModuleSpec(ctx1, parse_character('[q^2]')), 4)
    assert [(edge.label, edge.source) for edge in graph.missing] == [('y1', (3,))]
    assert len(graph_regions(graph)) == 2


def test_two_walls_cut_the_plane_into_four_regions(ctx2):
    spec = ModuleSpec(ctx2, parse_character('[q, 1]'))
    assert len(graph_regions(action_graph(spec, 4))) == 4
    generic = ModuleSpec(ctx2, parse_character('[c1, c2]'))
    assert len(graph_regions(action_graph(generic, 3))) == 1


def test_quotient_graph_has_no_missing_edges_inside(ctx1):
    graph = action_graph(ModuleSpec(ctx1, parse_character('[q^2]'), ModuleKind.S), 4)
    assert (4,) not in graph.vertices
    assert [(edge.label, edge.source) for edge in graph.missing] == []


def test_weight_spaces_are_one_dimensional(ctx2):
    spec = ModuleSpec(ctx2, parse_character('[q^-1, c2]'))
    assert set(weight_multiplicities(spec, 3).values()) == {1}


@pytest.mark.parametrize('text', ['[q^2, c1]', '[q^-2, q^0]', '[c1*q, c2]'])
@pytest.mark.parametrize('kind', [ModuleKind.P, ModuleKind.S])
def test_module_suites(ctx2, rng, text, kind):
    spec = ModuleSpec(ctx2, parse_character(text), kind)
    assert module_axiom_check(spec, radius=4, samples=2, rng=rng).passed
    assert weight_decomposition_check(spec, radius=3, samples=3, rng=rng).passed
    assert submodule_check(spec, radius=3).passed
    assert simplicity_check(spec).passed


def test_twisted_realization_satisfies_the_module_axiom(ctx2, rng):
    spec = ModuleSpec(ctx2, parse_character('[q, c1]'), ModuleKind.P, Realization.TWIST)
    assert module_axiom_check(spec, radius=3, samples=2, rng=rng).passed


@pytest.mark.parametrize('alpha', range(-3, 4))
def test_oracle_equivalence_rank_one(ctx1, alpha):
    spec = ModuleSpec(ctx1, Character((Integral(alpha),)))
    assert oracle_equivalence_check(spec).passed


@pytest.mark.slow
@pytest.mark.parametrize('a', range(-3, 4))
@pytest.mark.parametrize('b', range(-3, 4))
def test_oracle_equivalence_rank_two(ctx2, a, b):
    assert oracle_equivalence_check(ModuleSpec(ctx2, Character((Integral(a), Integral(b))))).passed
    assert oracle_equivalence_check(ModuleSpec(ctx2, Character((Integral(a), Generic(1, b))))).passed


@pytest.mark.slow
@pytest.mark.parametrize('text', ['[c1, c2]', '[q^2, c1]', '[q^0, q^-2]', '[q^-2, c2*q]'])
def test_module_axiom_at_scale(ctx2, rng, text):
    spec = ModuleSpec(ctx2, parse_character(text))
    assert module_axiom_check(spec, radius=6, samples=50, rng=rng).passed


def test_simplicity_of_the_trivial_character(ctx2):
    spec = ModuleSpec(ctx2, trivial_character(2))
    assert simplicity_check(spec).passed
    assert len(reaching_set(spec, 3)) < 49
