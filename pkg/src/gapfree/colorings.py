"""Edge colorings, vertex spectra, and the interval-coloring verifier.

An interval t-coloring is a proper edge coloring with colors 1..t in which
every color is used at least once and the colors incident to each vertex form
a contiguous integer interval. The verifier here is the ground truth that all
constructors and the exhaustive search must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional

from .errors import BadParameter
from .graph import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from edge ids to positive integer colors (a plain array)."""

    colors: tuple[int, ...]

    def __post_init__(self):
        for c in self.colors:
            if c < 1:
                raise ValueError(f"colors must be positive integers, got {c}")

    @cached_property
    def palette(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def t(self) -> int:
        """Number of distinct colors used."""
        return len(self.palette)

    def __getitem__(self, edge_id: int) -> int:
        return self.colors[edge_id]


@dataclass(frozen=True)
class Spectrum:
    """Distinct colors on the edges incident to one vertex."""

    vertex: int
    colors: tuple[int, ...]
    lo: Optional[int]
    hi: Optional[int]

    @property
    def is_interval(self) -> bool:
        if not self.colors:
            return True
        return self.hi - self.lo + 1 == len(self.colors)


@dataclass(frozen=True)
class PropernessViolation:
    vertex: int
    first_edge: int
    second_edge: int
    color: int


@dataclass(frozen=True)
class GapViolation:
    vertex: int
    colors: tuple[int, ...]


@dataclass(frozen=True)
class IntervalReport:
    """Verdict of verify_interval; valid iff all three violation lists are empty.

    unused_colors lists palette mismatches against 1..t: colors in that range
    with no edge, followed by any used colors outside it (so a valid report
    implies the palette is exactly 1..t).
    """

    valid: bool
    t: int
    properness_violations: tuple[PropernessViolation, ...]
    gap_violations: tuple[GapViolation, ...]
    unused_colors: tuple[int, ...]


def _check_total(g: Graph, coloring: EdgeColoring) -> None:
    if len(coloring.colors) != g.m:
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for a graph with {g.m} edges"
        )


def spectrum(g: Graph, coloring: EdgeColoring, v: int) -> Spectrum:
    """Distinct sorted colors incident to v."""
    _check_total(g, coloring)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    cols = tuple(sorted({coloring.colors[e] for e in g.incident[v]}))
    if cols:
        return Spectrum(v, cols, cols[0], cols[-1])
    return Spectrum(v, cols, None, None)


def verify_interval(g: Graph, coloring: EdgeColoring, t: int) -> IntervalReport:
    """Check properness, full palette usage 1..t, and per-vertex contiguity.

    All violations are reported, not just the first; violations are data,
    not exceptions.
    """
    _check_total(g, coloring)
    if t < 0:
        raise ValueError(f"declared color count must be >= 0, got {t}")

    properness: list[PropernessViolation] = []
    gaps: list[GapViolation] = []
    for v in range(g.n):
        by_color: dict[int, list[int]] = {}
        for e in g.incident[v]:
            by_color.setdefault(coloring.colors[e], []).append(e)
        for color, es in sorted(by_color.items()):
            if len(es) > 1:
                for a, b in combinations(es, 2):
                    properness.append(PropernessViolation(v, a, b, color))
        spec = spectrum(g, coloring, v)
        if not spec.is_interval:
            gaps.append(GapViolation(v, spec.colors))

    used = coloring.palette
    mismatches = [c for c in range(1, t + 1) if c not in used]
    mismatches += sorted(c for c in used if c > t)
    unused = tuple(mismatches)

    return IntervalReport(
        valid=not (properness or gaps or unused),
        t=t,
        properness_violations=tuple(properness),
        gap_violations=tuple(gaps),
        unused_colors=unused,
    )


def shift(coloring: EdgeColoring, offset: int) -> EdgeColoring:
    """Add a nonnegative offset to every color; preserves properness and gaps."""
    if offset < 0:
        raise BadParameter(f"shift offset must be >= 0, got {offset}")
    return EdgeColoring(tuple(c + offset for c in coloring.colors))


def write_coloring(path, g: Graph, coloring: EdgeColoring, t: Optional[int] = None) -> None:
    """Coloring file: "t=<K>" header, then one "edge_id u v color" line per edge."""
    _check_total(g, coloring)
    declared = coloring.t if t is None else t
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"t={declared}\n")
        for k, (u, v) in enumerate(g.edges):
            fh.write(f"{k} {u} {v} {coloring.colors[k]}\n")


def read_coloring(path) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Parse a coloring file into (declared t, edge endpoints by id, colors by id)."""
    rows: list[str] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append(line)
    if not rows or not rows[0].startswith("t="):
        raise BadParameter(f"{path}: missing t=<K> header")
    try:
        t = int(rows[0][2:])
    except ValueError:
        raise BadParameter(f"{path}: malformed header {rows[0]!r}") from None
    m = len(rows) - 1
    edges: list[Optional[tuple[int, int]]] = [None] * m
    colors = [0] * m
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 4:
            raise BadParameter(f"{path}: malformed coloring line {row!r}")
        try:
            k, u, v, c = (int(x) for x in parts)
        except ValueError:
            raise BadParameter(f"{path}: malformed coloring line {row!r}") from None
        if not 0 <= k < m:
            raise BadParameter(f"{path}: edge id {k} outside 0..{m - 1}")
        if edges[k] is not None:
            raise BadParameter(f"{path}: duplicate edge id {k}")
        if c < 1:
            raise BadParameter(f"{path}: edge {k} has non-positive color {c}")
        edges[k] = (u, v)
        colors[k] = c
    # m lines with m distinct in-range ids: every slot is filled here
    return t, [e for e in edges if e is not None], colors


def load_coloring(path, g: Graph) -> tuple[int, EdgeColoring]:
    """Read a coloring file and validate it against a graph's edge ids."""
    t, edges, colors = read_coloring(path)
    if len(edges) != g.m:
        raise BadParameter(
            f"{path}: {len(edges)} colored edges for a graph with {g.m}"
        )
    for k, (u, v) in enumerate(edges):
        eu, ev = min(u, v), max(u, v)
        if g.edges[k] != (eu, ev):
            raise BadParameter(
                f"{path}: edge id {k} is ({u},{v}) but the graph has {g.edges[k]}"
            )
    return t, EdgeColoring(tuple(colors))
