"""The five standard graph products, with pair coordinates and edge-origin tags.

A product vertex (i, j) is stored at index i * |V(H)| + j (row-major), fixed
globally so colorings and provenance files stay comparable across runs. Each
edge carries an origin tag derived from its endpoints' coordinates:

    G_layer  left coordinates differ, right equal
    H_layer  left equal, right differ
    cross    both differ
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import BadParameter, EmptyFactor, OutOfRange
from .graph import Graph, build_graph


class ProductKind(Enum):
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    STRONG_TENSOR = "strong_tensor"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"


class EdgeOrigin(Enum):
    G_LAYER = "G_layer"
    H_LAYER = "H_layer"
    CROSS = "cross"


@dataclass(frozen=True)
class ProductGraph:
    """A product's graph together with its factor-pair provenance."""

    graph: Graph
    kind: ProductKind
    left_n: int
    right_n: int

    @cached_property
    def coords(self) -> tuple[tuple[int, int], ...]:
        return tuple(divmod(v, self.right_n) for v in range(self.graph.n))

    @cached_property
    def edge_origin(self) -> tuple[EdgeOrigin, ...]:
        tags = []
        for u, v in self.graph.edges:
            (i, p), (j, q) = self.coords[u], self.coords[v]
            if i == j:
                tags.append(EdgeOrigin.H_LAYER)
            elif p == q:
                tags.append(EdgeOrigin.G_LAYER)
            else:
                tags.append(EdgeOrigin.CROSS)
        return tuple(tags)

    def coord_of(self, vertex: int) -> tuple[int, int]:
        if not 0 <= vertex < self.graph.n:
            raise OutOfRange(f"vertex {vertex} outside 0..{self.graph.n - 1}")
        return self.coords[vertex]

    def vertex_of(self, i: int, j: int) -> int:
        if not (0 <= i < self.left_n and 0 <= j < self.right_n):
            raise OutOfRange(f"pair ({i},{j}) outside {self.left_n}x{self.right_n}")
        return i * self.right_n + j


def product(kind: ProductKind, g: Graph, h: Graph) -> ProductGraph:
    """Build the product of two nonempty graphs; deterministic for equal inputs."""
    if g.n == 0 or h.n == 0:
        raise EmptyFactor("product factors must have at least one vertex")
    m = h.n
    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG_TENSOR, ProductKind.STRONG):
        for i, j in g.edges:
            for p in range(m):
                add(i * m + p, j * m + p)
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG, ProductKind.LEXICOGRAPHIC):
        for i in range(g.n):
            for p, q in h.edges:
                add(i * m + p, i * m + q)
    if kind in (ProductKind.TENSOR, ProductKind.STRONG_TENSOR, ProductKind.STRONG):
        for i, j in g.edges:
            for p, q in h.edges:
                add(i * m + p, j * m + q)
                add(i * m + q, j * m + p)
    if kind is ProductKind.LEXICOGRAPHIC:
        for i, j in g.edges:
            for p in range(m):
                for q in range(m):
                    add(i * m + p, j * m + q)

    return ProductGraph(
        graph=build_graph(g.n * m, sorted(edges)),
        kind=kind,
        left_n=g.n,
        right_n=m,
    )


def write_provenance(path, prod: ProductGraph) -> None:
    """Sidecar file: one "edge_id origin i p j q" line per edge."""
    with open(path, "w", encoding="ascii") as fh:
        for k, (u, v) in enumerate(prod.graph.edges):
            (i, p), (j, q) = prod.coords[u], prod.coords[v]
            fh.write(f"{k} {prod.edge_origin[k].value} {i} {p} {j} {q}\n")


def read_provenance(path) -> list[tuple[int, EdgeOrigin, int, int, int, int]]:
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 6:
                raise BadParameter(f"{path}: malformed provenance line {line!r}")
            rows.append(
                (
                    int(parts[0]),
                    EdgeOrigin(parts[1]),
                    int(parts[2]),
                    int(parts[3]),
                    int(parts[4]),
                    int(parts[5]),
                )
            )
    return rows
