"""Graphviz and SVG output: structure over pixels."""

from __future__ import annotations

import random
import re
import xml.etree.ElementTree as ET

import pytest

from diskflows.codec import code_to_graph, parse_code
from diskflows.enumeration import enumerate_flows
from diskflows.model import CellKind, boundary_directions, classify_cell
from diskflows.render import diagram_to_svg, tree_to_dot

SVG_NS = "{http://www.w3.org/2000/svg}"


def graph_of(text: str):
    return code_to_graph(parse_code(text))


def loop_parents(svg: str) -> dict[int, int | None]:
    """Map loop vertex id to the enclosing loop's vertex id (None at top)."""
    found: dict[int, int | None] = {}

    def walk(element, parent):
        if element.tag == SVG_NS + "g" and element.get("class") == "loop":
            vertex = int(element.get("data-vertex"))
            found[vertex] = parent
            parent = vertex
        for child in element:
            walk(child, parent)

    walk(ET.fromstring(svg), None)
    return found


def cyclic_cells(graph) -> set[int]:
    return {
        v
        for v in range(graph.tree.vertex_count)
        if classify_cell(boundary_directions(graph, v)) is CellKind.CYCLIC
    }


# ---------------------------------------------------------------------------
# Graphviz view


def test_dot_single_vertex():
    dot = tree_to_dot(graph_of("0"))
    assert "digraph flow_code {" in dot
    assert "ordering=out;" in dot
    assert '0 [shape=doublecircle, label="0"];' in dot
    assert "->" not in dot


def test_dot_colors_follow_overlines():
    dot = tree_to_dot(graph_of("2100~"))
    assert dot.count("->") == 3
    assert "0 -> 1 [color=black];" in dot
    assert "0 -> 2 [color=black];" in dot
    assert "1 -> 3 [color=red];" in dot


def test_dot_marks_primed_edges_with_a_label():
    dot = tree_to_dot(graph_of("110~'"))
    assert "1 -> 2 [color=red, label=\"'\", fontcolor=red];" in dot


def test_dot_preserves_child_order():
    dot = tree_to_dot(graph_of("2100~"))
    assert dot.index("0 -> 1") < dot.index("0 -> 2")


def test_dot_renders_unrealizable_trees_too():
    dot = tree_to_dot(graph_of("300~0"))
    assert dot.count("->") == 3


# ---------------------------------------------------------------------------
# Flow diagram view


def test_svg_structural_counts_for_known_codes():
    cases = {
        "0": (0, 0, 0, 1),
        "10~'": (1, 0, 1, 2),
        "2100~": (3, 2, 1, 3),
        "20~0~'": (2, 0, 2, 3),
    }
    for text, (loops, forward, reversed_, dots) in cases.items():
        svg = diagram_to_svg(graph_of(text))
        assert svg.count('class="loop"') == loops, text
        assert svg.count('class="arrow forward"') == forward, text
        assert svg.count('class="arrow reversed"') == reversed_, text
        assert svg.count("elliptic-dot") == dots, text


def test_svg_is_well_formed_xml_and_deterministic():
    graph = graph_of("2100~")
    svg = diagram_to_svg(graph)
    ET.fromstring(svg)
    assert svg == diagram_to_svg(graph)
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')


def test_svg_group_nesting_mirrors_the_tree():
    graph = graph_of("2100~")
    parents = loop_parents(diagram_to_svg(graph))
    assert parents == {1: None, 2: None, 3: 1}


def test_svg_refuses_unrealizable_graphs():
    with pytest.raises(ValueError):
        diagram_to_svg(graph_of("300~0"))


def test_svg_coordinates_are_rounded():
    svg = diagram_to_svg(graph_of("110~"))
    for number in re.findall(r'[d cxy]="([-0-9. L CZM]+)"', svg):
        for field in re.findall(r"-?\d+\.\d+", number):
            whole, frac = field.split(".")
            assert len(frac) == 2, svg


def test_svg_invariants_on_sampled_codes():
    rng = random.Random(20260815)
    pool = [code for n in range(5) for code in enumerate_flows(n)]
    for code in rng.sample(pool, 40):
        graph = code_to_graph(code)
        svg = diagram_to_svg(graph)
        n = graph.tree.separatrix_count
        overlines = sum(1 for c in graph.colors[1:] if c == -1)
        assert svg.count('class="loop"') == n
        assert svg.count('class="arrow reversed"') == overlines
        assert svg.count('class="arrow forward"') == n - overlines
        assert svg.count("elliptic-dot") == len(cyclic_cells(graph))
        parents = loop_parents(svg)
        tree_parents = graph.tree.parents()
        assert set(parents) == set(range(1, graph.tree.vertex_count))
        for vertex, parent in parents.items():
            expected = tree_parents[vertex]
            assert parent == (None if expected == 0 else expected)
