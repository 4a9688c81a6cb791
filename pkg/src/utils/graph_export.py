"""
Action graph export
DOT through the graphviz package (source only, nothing is rendered) and JSON lines
"""

import functools
import json
from typing import Iterable, Tuple

import graphviz as gv

from core.characters import format_character
from core.scalars import format_scalar
from modules.weight_module import ActionGraph

digraph = functools.partial(gv.Digraph, format='svg')


def node_id(k: Tuple[int, ...]) -> str:
    """v_2, v_m1_0: minus signs become m so the id stays a bare DOT identifier"""
    return 'v_' + '_'.join(str(x).replace('-', 'm') for x in k)


def node_label(k: Tuple[int, ...]) -> str:
    return 'v(' + ','.join(str(x) for x in k) + ')'


def add_nodes(graph, nodes: Iterable):
    for n in nodes:
        if isinstance(n, tuple):
            graph.node(n[0], **n[1])
        else:
            graph.node(n)
    return graph


def add_edges(graph, edges: Iterable):
    for e in edges:
        if isinstance(e[0], tuple):
            graph.edge(*e[0], **e[1])
        else:
            graph.edge(*e)
    return graph


def to_graphviz(graph: ActionGraph, show_missing: bool = True) -> gv.Digraph:
    spec = graph.spec
    dot = digraph(name=f"{spec.kind.value}_phi")
    dot.attr(label=f"{spec.kind.value}_phi, phi = {format_character(spec.phi)}, radius {graph.radius}")
    if spec.n == 1:
        dot.attr(rankdir='LR')

    add_nodes(dot, [
        (node_id(k), {'label': node_label(k), 'tooltip': format_character(graph.weights[k])})
        for k in graph.vertices
    ])
    add_edges(dot, [
        ((node_id(edge.source), node_id(edge.target)),
         {'label': edge.label, 'tooltip': format_scalar(edge.coefficient)})
        for edge in graph.edges
    ])
    if show_missing:
        add_edges(dot, [
            ((node_id(edge.source), node_id(edge.target)),
             {'label': f"{edge.label} = 0", 'style': 'dashed', 'color': 'red'})
            for edge in graph.missing
        ])
    return dot


def to_dot(graph: ActionGraph, show_missing: bool = True) -> str:
    return to_graphviz(graph, show_missing).source


def to_json_lines(graph: ActionGraph) -> str:
    """One adjacency record per vertex"""
    lines = []
    for k in graph.vertices:
        lines.append(json.dumps({
            'vertex': list(k),
            'weight': format_character(graph.weights[k]),
            'edges': [
                {'generator': edge.label, 'target': list(edge.target),
                 'coefficient': format_scalar(edge.coefficient)}
                for edge in graph.out_edges(k)
            ],
            'missing': [
                {'generator': edge.label, 'target': list(edge.target)}
                for edge in graph.missing if edge.source == k
            ],
        }))
    return '\n'.join(lines)
