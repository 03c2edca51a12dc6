from typing import Dict, Optional

import networkx as nx
import numpy as np
import pytest

from mereon.mckay import (
    ADELabel,
    McKayGraph,
    NonIntegralAdjacencyError,
    ade_classify,
    ade_classify_adjacency,
    ade_family,
    affine_d,
    affine_kernel_check,
    character_table,
    defining_character,
    finite_diagram,
    mckay_graph,
    star_with_arms,
    sub_diagram_check,
    template,
)
from mereon.mckay.graph import adjacency_from_characters
from mereon.quatgroup import build_2T


def _adjacency(graph: nx.Graph) -> np.ndarray:
    return nx.to_numpy_array(graph, dtype=np.int64)


@pytest.mark.parametrize(
    ("group", "nodes", "affine", "finite"),
    [
        ("2T", 7, ADELabel.AFFINE_E6, ADELabel.E6),
        ("2O", 8, ADELabel.AFFINE_E7, ADELabel.E7),
        ("2I", 9, ADELabel.AFFINE_E8, ADELabel.E8),
    ],
)
def test_mckay_correspondence(
    mckay_graphs: Dict[str, McKayGraph], group: str, nodes: int, affine: ADELabel, finite: ADELabel
) -> None:
    graph = mckay_graphs[group]

    assert graph.nodes == nodes
    assert graph.label == affine
    assert ade_classify(graph) == affine
    assert finite_diagram(graph) == finite
    assert graph.residual < 1e-6


def test_dimension_vector_spans_affine_kernel(mckay_graphs: Dict[str, McKayGraph]) -> None:
    for graph in mckay_graphs.values():
        report = affine_kernel_check(graph)

        assert report.ok
        assert report.rank == graph.nodes - 1


def test_e8_graph_structure(mckay_graphs: Dict[str, McKayGraph]) -> None:
    graph = mckay_graphs["2I"]

    assert graph.dimensions == (1, 2, 2, 3, 3, 4, 4, 5, 6)
    assert sorted(graph.degrees()) == [1, 1, 1, 2, 2, 2, 2, 2, 3]
    assert graph.to_networkx().number_of_edges() == 8
    assert np.array_equal(graph.adjacency, graph.adjacency.T)
    # the branch node carries the largest irrep
    assert graph.degrees()[graph.dimensions.index(6)] == 3


def test_same_graph_for_any_seed() -> None:
    group = build_2T()

    assert np.array_equal(mckay_graph(group, seed=0).adjacency, mckay_graph(group, seed=123).adjacency)


def test_non_integral_adjacency() -> None:
    group = build_2T()
    table = character_table(group)
    chi_v = defining_character(group, table.classes)

    with pytest.raises(NonIntegralAdjacencyError, match="2T: adjacency entry off an integer"):
        adjacency_from_characters(table, chi_v / 2)
    with pytest.raises(NonIntegralAdjacencyError, match="2T: negative adjacency multiplicity"):
        adjacency_from_characters(table, -chi_v)


def test_templates() -> None:
    assert template(ADELabel.AFFINE_E8).number_of_nodes() == 9
    assert template(ADELabel.E6).number_of_nodes() == 6
    with pytest.raises(ValueError, match="No template for other"):
        template(ADELabel.OTHER)


def test_classify_rejects_disconnected_and_looped_graphs() -> None:
    disconnected = _adjacency(nx.union(star_with_arms((1, 2, 2)), nx.path_graph(2), rename=("a", "b")))
    looped = _adjacency(template(ADELabel.E7))
    looped[0, 0] = 1

    assert ade_classify_adjacency(disconnected) == ADELabel.OTHER
    assert ade_classify_adjacency(looped) == ADELabel.OTHER
    assert ade_classify_adjacency(np.zeros((0, 0), dtype=np.int64)) == ADELabel.OTHER


@pytest.mark.parametrize(
    ("graph", "family"),
    [
        (nx.cycle_graph(5), "Â4"),
        (nx.path_graph(4), "A4"),
        (affine_d(5), "D̂5"),
        (star_with_arms((1, 1, 2)), "D5"),
        (template(ADELabel.AFFINE_E7), "Ê7"),
        (template(ADELabel.E8), "E8"),
        (nx.complete_graph(4), None),
    ],
)
def test_ade_family(graph: nx.Graph, family: Optional[str]) -> None:
    assert ade_family(_adjacency(graph)) == family


def test_affine_d_needs_four() -> None:
    assert affine_d(4).number_of_nodes() == 5
    with pytest.raises(ValueError, match="D̂_n needs n ≥ 4, got 3"):
        affine_d(3)


def test_sub_diagrams() -> None:
    report = sub_diagram_check()

    assert report.e6_in_e7
    assert report.e7_in_e8
    assert report.e6_in_e8
    assert report.nested
    assert not report.affine_e6_in_affine_e8
