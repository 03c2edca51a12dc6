"""McKay graphs of the binary polyhedral groups and their ADE classification."""
from enum import Enum
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from mereon.mckay.characters import (
    CHARACTER_TOLERANCE,
    DEFAULT_SEED,
    CharacterTable,
    character_table,
    defining_character,
)
from mereon.quatgroup import BinaryGroup
from mereon.quatgroup.quaternion import F
from mereon.utils import setup_logger

logger = setup_logger(__name__)


class NonIntegralAdjacencyError(Exception):
    pass


class ADELabel(str, Enum):
    AFFINE_E6 = "Ê6"
    AFFINE_E7 = "Ê7"
    AFFINE_E8 = "Ê8"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    OTHER = "other"


class McKayGraph(NamedTuple):
    group: str
    adjacency: np.ndarray
    dimensions: Tuple[int, ...]
    label: ADELabel
    residual: float

    @property
    def nodes(self) -> int:
        return len(self.dimensions)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for node, dimension in enumerate(self.dimensions):
            graph.add_node(node, dimension=dimension)
        for i, j in zip(*np.nonzero(np.triu(self.adjacency))):
            graph.add_edge(int(i), int(j), weight=int(self.adjacency[i, j]))
        return graph

    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(d) for d in self.adjacency.sum(axis=1))


class KernelReport(NamedTuple):
    rank: int
    nodes: int
    residual: float

    @property
    def ok(self) -> bool:
        return self.rank == self.nodes - 1 and self.residual < CHARACTER_TOLERANCE


class SubDiagramReport(NamedTuple):
    e6_in_e7: bool
    e7_in_e8: bool
    e6_in_e8: bool
    affine_e6_in_affine_e8: bool

    @property
    def nested(self) -> bool:
        return self.e6_in_e7 and self.e7_in_e8 and self.e6_in_e8


def star_with_arms(arms: Sequence[int]) -> nx.Graph:
    """A branch node 0 with one path of the given length hanging off it per arm."""
    graph = nx.Graph()
    graph.add_node(0)
    next_node = 1
    for length in arms:
        previous = 0
        for _ in range(length):
            graph.add_edge(previous, next_node)
            previous, next_node = next_node, next_node + 1
    return graph


AFFINE_TEMPLATES: Dict[ADELabel, Tuple[int, ...]] = {
    ADELabel.AFFINE_E6: (2, 2, 2),
    ADELabel.AFFINE_E7: (1, 3, 3),
    ADELabel.AFFINE_E8: (1, 2, 5),
}
FINITE_TEMPLATES: Dict[ADELabel, Tuple[int, ...]] = {
    ADELabel.E6: (1, 2, 2),
    ADELabel.E7: (1, 2, 3),
    ADELabel.E8: (1, 2, 4),
}


def template(label: ADELabel) -> nx.Graph:
    arms = {**AFFINE_TEMPLATES, **FINITE_TEMPLATES}.get(label)
    if arms is None:
        raise ValueError(f"No template for {label.value}")
    return star_with_arms(arms)


def affine_d(n: int) -> nx.Graph:
    """D̂_n: a path of n − 1 nodes with two extra leaves on each end node (n + 1 nodes)."""
    if n < 4:
        raise ValueError(f"D̂_n needs n ≥ 4, got {n}")
    graph = nx.path_graph(n - 3)
    last = n - 4
    graph.add_edges_from([(0, n - 3), (0, n - 2), (last, n - 1), (last, n)])
    return graph


def adjacency_from_characters(table: CharacterTable, chi_v: np.ndarray) -> Tuple[np.ndarray, float]:
    """A_ij = (1/|G|) Σ_c |C_c| χ_V(c) χ_i(c) conj(χ_j(c)), rounded; returns the matrix and the rounding residual."""
    weighted = table.characters * (table.class_sizes * chi_v)
    raw = weighted @ table.characters.conj().T / table.order
    rounded = np.rint(raw.real)
    residual = float(np.max(np.abs(raw - rounded)))
    if residual > CHARACTER_TOLERANCE:
        raise NonIntegralAdjacencyError(f"{table.label}: adjacency entry off an integer by {residual:.2e}")
    if (rounded < 0).any():
        raise NonIntegralAdjacencyError(f"{table.label}: negative adjacency multiplicity")
    adjacency = rounded.astype(np.int64)
    if not np.array_equal(adjacency, adjacency.T):
        raise NonIntegralAdjacencyError(f"{table.label}: adjacency is not symmetric")
    return adjacency, residual


def _graph(adjacency: np.ndarray) -> nx.Graph:
    return nx.from_numpy_array(np.asarray(adjacency))


def ade_classify_adjacency(adjacency: np.ndarray) -> ADELabel:
    graph = _graph(adjacency)
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph) or nx.number_of_selfloops(graph):
        return ADELabel.OTHER
    for label in (*AFFINE_TEMPLATES, *FINITE_TEMPLATES):
        if nx.is_isomorphic(graph, template(label)):
            return label
    return ADELabel.OTHER


def ade_classify(g: McKayGraph) -> ADELabel:
    return ade_classify_adjacency(g.adjacency)


def ade_family(adjacency: np.ndarray) -> Optional[str]:
    """Names the A/D/E family of a connected graph, affine or ordinary, or None."""
    if (label := ade_classify_adjacency(adjacency)) is not ADELabel.OTHER:
        return label.value
    graph = _graph(adjacency)
    n = graph.number_of_nodes()
    if n == 0 or not nx.is_connected(graph):
        return None
    if n >= 3 and nx.is_isomorphic(graph, nx.cycle_graph(n)):
        return f"Â{n - 1}"
    if nx.is_isomorphic(graph, nx.path_graph(n)):
        return f"A{n}"
    if n >= 5 and nx.is_isomorphic(graph, affine_d(n - 1)):
        return f"D̂{n - 1}"
    if n >= 4 and nx.is_isomorphic(graph, star_with_arms((1, 1, n - 3))):
        return f"D{n}"
    return None


def mckay_graph(group: BinaryGroup[F], seed: int = DEFAULT_SEED) -> McKayGraph:
    table = character_table(group, seed=seed)
    chi_v = defining_character(group, table.classes)
    adjacency, residual = adjacency_from_characters(table, chi_v)
    label = ade_classify_adjacency(adjacency)
    logger.info(f"McKay graph of {table.label}: {len(table.dimensions)} nodes, {label.value}")
    return McKayGraph(table.label, adjacency, table.dimensions, label, residual)


def finite_diagram(g: McKayGraph) -> ADELabel:
    """Drops the trivial-irrep node (row 0) and classifies what remains."""
    reduced = np.delete(np.delete(g.adjacency, 0, axis=0), 0, axis=1)
    return ade_classify_adjacency(reduced)


def affine_kernel_check(g: McKayGraph) -> KernelReport:
    """The dimension vector spans the kernel of the affine Cartan matrix 2I − A."""
    cartan = 2 * np.eye(g.nodes) - g.adjacency
    dimensions = np.array(g.dimensions, dtype=np.float64)
    residual = float(np.linalg.norm(cartan @ dimensions) / np.linalg.norm(dimensions))
    return KernelReport(int(np.linalg.matrix_rank(cartan, tol=CHARACTER_TOLERANCE)), g.nodes, residual)


def _embeds(small: ADELabel, big: ADELabel) -> bool:
    return GraphMatcher(template(big), template(small)).subgraph_is_isomorphic()


def sub_diagram_check() -> SubDiagramReport:
    return SubDiagramReport(
        e6_in_e7=_embeds(ADELabel.E6, ADELabel.E7),
        e7_in_e8=_embeds(ADELabel.E7, ADELabel.E8),
        e6_in_e8=_embeds(ADELabel.E6, ADELabel.E8),
        affine_e6_in_affine_e8=_embeds(ADELabel.AFFINE_E6, ADELabel.AFFINE_E8),
    )
