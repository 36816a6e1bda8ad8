"""Immutable simple undirected graphs with dense vertex ids and stable edge ids.

Vertices are the integers 0..n-1. Edges are stored canonically: each pair with
the smaller endpoint first, the whole list sorted, so an edge's position in the
list is a stable id. Colorings elsewhere in the package are plain arrays
indexed by these edge ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import BadParameter, DuplicateEdge, LoopEdge, VertexOutOfRange


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; use build_graph() to construct one safely."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(e) for e in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def _edge_ids(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise KeyError(f"no edge {key} in graph") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    is_regular: bool
    regularity: Optional[int]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Raises LoopEdge, DuplicateEdge, or VertexOutOfRange on bad input.
    """
    if n < 0:
        raise BadParameter(f"vertex count must be >= 0, got {n}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
        canon.append(key)
    return Graph(n, tuple(sorted(canon)))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees
    regular = len(set(degs)) <= 1
    return DegreeProfile(
        degrees=degs,
        max_degree=g.max_degree,
        is_regular=regular,
        regularity=(degs[0] if regular and g.n > 0 else (0 if regular else None)),
    )


def is_bipartite(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """BFS 2-coloring; returns (True, side-per-vertex) or (False, None)."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False, None
    return True, tuple(side)


def bfs_edge_order(g: Graph) -> tuple[int, ...]:
    """Edge ids in BFS discovery order from vertex 0 (restarting per component).

    Every edge appears once, listed when its earlier-dequeued endpoint is
    processed; this gives the exhaustive searches good constraint locality.
    """
    order: list[int] = []
    listed = [False] * g.m
    visited = [False] * g.n
    for start in range(g.n):
        if visited[start]:
            continue
        visited[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                e = g.edge_id(u, w)
                if not listed[e]:
                    listed[e] = True
                    order.append(e)
                if not visited[w]:
                    visited[w] = True
                    queue.append(w)
    return tuple(order)


def write_edge_list(path, g: Graph) -> None:
    """Write the text edge-list format: "n m" header then one "u v" line per edge."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{g.n} {g.m}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    """Read the text edge-list format; '#' comment lines are ignored."""
    rows: list[str] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append(line)
    if not rows:
        raise BadParameter(f"{path}: empty edge-list file")
    head = rows[0].split()
    if len(head) != 2:
        raise BadParameter(f"{path}: malformed header {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise BadParameter(f"{path}: malformed header {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise BadParameter(f"{path}: header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise BadParameter(f"{path}: malformed edge line {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BadParameter(f"{path}: malformed edge line {row!r}") from None
    return build_graph(n, edges)
