"""Interval colorings of product graphs composed from factor colorings.

Each constructor takes an interval coloring of the left factor (plus, where
required, a regular right factor that itself admits one) and emits a coloring
of the product with a predictable color count:

    tensor            t * r
    strong tensor     t * (r + 1)
    strong            t * (r + 1) + r
    lex over n*K1     t * n          (minimal variant)
                      t * n + n - 1  (maximal variant)
    lex over H        t * n + r
    cartesian         at most t_left + t_right

where t is the left coloring's count, r the right factor's regularity, and n
the right factor's vertex count. The tensor-style constructors transport an
exact coloring of the bipartite double cover of H through per-edge offsets;
the copy subgraphs of the strong and lexicographic products are filled with an
exact coloring of H anchored at each left vertex's spectrum boundary. Every
constructor re-verifies its own output and refuses to return an invalid
coloring.

Also here: the parity decision for tori and Hamming graphs, and evaluators for
the known bound formulas on products and the grid-like families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .chromatic import bipartite_regular_coloring, exact_chromatic_index
from .colorings import EdgeColoring, verify_interval
from .errors import (
    BadDims,
    BadN,
    BadParameter,
    ConstructionFailed,
    InvalidAlpha,
    MissingParameter,
    NotClass1,
    NotRegular,
)
from .graph import Graph, build_graph, degree_profile, is_bipartite
from .limits import DEFAULT_BUDGET
from .products import ProductGraph, ProductKind, product

_K2 = build_graph(2, [(0, 1)])


@dataclass(frozen=True)
class ConstructionInput:
    """A validated (left graph, interval coloring, right factor) bundle.

    t is the left coloring's color count, r the right factor's regularity
    (when a right graph is present), n its vertex count or the blow-up size.
    """

    g: Graph
    alpha: EdgeColoring
    t: int
    h: Optional[Graph] = None
    r: Optional[int] = None
    n: Optional[int] = None


def prepare_input(
    g: Graph,
    alpha: EdgeColoring,
    h: Optional[Graph] = None,
    n: Optional[int] = None,
) -> ConstructionInput:
    """Validate constructor inputs once: alpha must be an interval coloring of
    g, and h (when given) must be regular with degree >= 1."""
    t = _validated_alpha(g, alpha)
    r = _require_regular(h) if h is not None else None
    return ConstructionInput(g, alpha, t, h, r, h.n if h is not None else n)


def _validated_alpha(g: Graph, alpha: EdgeColoring) -> int:
    if len(alpha.colors) != g.m:
        raise InvalidAlpha(
            f"coloring has {len(alpha.colors)} entries for a graph with {g.m} edges"
        )
    if g.m == 0:
        raise InvalidAlpha("the colored factor must have at least one edge")
    t = alpha.t
    report = verify_interval(g, alpha, t)
    if not report.valid:
        raise InvalidAlpha(
            f"not an interval {t}-coloring"
            f" ({len(report.properness_violations)} properness,"
            f" {len(report.gap_violations)} gap,"
            f" {len(report.unused_colors)} palette violations)"
        )
    return t


def _require_regular(h: Graph) -> int:
    profile = degree_profile(h)
    if not profile.is_regular or not profile.regularity:
        raise NotRegular(
            f"the right factor must be r-regular with r >= 1, degrees {set(profile.degrees)}"
        )
    return profile.regularity


def _interval_regular_coloring(h: Graph, budget: int) -> EdgeColoring:
    """Exact coloring of a regular class-1 graph; every vertex sees all colors."""
    ok, _ = is_bipartite(h)
    if ok:
        return bipartite_regular_coloring(h)
    result = exact_chromatic_index(h, budget)
    if not result.class1:
        raise NotClass1(
            f"right factor has chi' = {result.chi_prime} > max degree {h.max_degree}"
        )
    return result.witness


def _spectra_bounds(g: Graph, alpha: EdgeColoring) -> tuple[list[int], list[int]]:
    """Per-vertex (min, max) of the incident colors.

    Isolated vertices default to min 1 / max 0, which makes the offset
    formulas collapse to no shift there.
    """
    mins = [0] * g.n
    maxs = [0] * g.n
    for k, (u, v) in enumerate(g.edges):
        c = alpha.colors[k]
        for x in (u, v):
            if mins[x] == 0 or c < mins[x]:
                mins[x] = c
            if c > maxs[x]:
                maxs[x] = c
    return [m if m else 1 for m in mins], maxs


def _double_cover_table(kind: ProductKind, h: Graph) -> dict[tuple[int, int], int]:
    """Exact coloring of K2 x H (or K2 (x) H), keyed by (copy-0 index, copy-1 index).

    The cover is regular bipartite, so the peeled coloring is an interval one
    in which every vertex sees every color; that is what makes the per-edge
    offsets below close up into intervals.
    """
    cover = product(kind, _K2, h)
    beta = bipartite_regular_coloring(cover.graph)
    n = h.n
    table: dict[tuple[int, int], int] = {}
    for k, (a, b) in enumerate(cover.graph.edges):
        table[(a, b - n)] = beta.colors[k]
    return table


def _finish(
    prod: ProductGraph, colors: list[int], expected_t: int, what: str
) -> tuple[ProductGraph, EdgeColoring]:
    coloring = EdgeColoring(tuple(colors))
    report = verify_interval(prod.graph, coloring, expected_t)
    if not report.valid:
        raise ConstructionFailed(
            f"{what} produced an invalid coloring"
            f" ({len(report.properness_violations)} properness,"
            f" {len(report.gap_violations)} gap,"
            f" {len(report.unused_colors)} palette violations)"
        )
    return prod, coloring


def _offset_by_double_cover(
    kind: ProductKind, g: Graph, alpha: EdgeColoring, h: Graph, stride: int
) -> tuple[ProductGraph, list[int]]:
    """Color every edge of a tensor-style product by block offsets.

    An edge between copies i < j inherits the block of the left color of
    (i, j) and, inside the block, the cover color of its right endpoints taken
    with copy i on the covering side 0.
    """
    table = _double_cover_table(kind, h)
    prod = product(kind, g, h)
    colors: list[int] = []
    for a, b in prod.graph.edges:
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        left_color = alpha.colors[g.edge_id(i, j)]
        colors.append((left_color - 1) * stride + table[(p, q)])
    return prod, colors


def tensor_interval(
    g: Graph, alpha: EdgeColoring, h: Graph
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval (t*r)-coloring of the tensor product with an r-regular right factor."""
    inp = prepare_input(g, alpha, h)
    prod, colors = _offset_by_double_cover(ProductKind.TENSOR, g, alpha, h, inp.r)
    return _finish(prod, colors, inp.t * inp.r, "tensor construction")


def strong_tensor_interval(
    g: Graph, alpha: EdgeColoring, h: Graph
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval (t*(r+1))-coloring of the strong tensor (semistrong) product."""
    inp = prepare_input(g, alpha, h)
    prod, colors = _offset_by_double_cover(
        ProductKind.STRONG_TENSOR, g, alpha, h, inp.r + 1
    )
    return _finish(prod, colors, inp.t * (inp.r + 1), "strong tensor construction")


def strong_interval(
    g: Graph, alpha: EdgeColoring, h: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval (t*(r+1)+r)-coloring of the strong product.

    The right factor must additionally be class 1 (else no interval coloring
    of it exists to fill the copies with). Phase 1 colors the semistrong part
    exactly as strong_tensor_interval; phase 2 lays an exact coloring of H
    over each copy, anchored directly above the copy's phase-1 ceiling.
    """
    inp = prepare_input(g, alpha, h)
    t, r = inp.t, inp.r
    h_coloring = _interval_regular_coloring(h, budget)
    table = _double_cover_table(ProductKind.STRONG_TENSOR, h)
    stride = r + 1
    _, max_s = _spectra_bounds(g, alpha)

    prod = product(ProductKind.STRONG, g, h)
    colors = [0] * prod.graph.m
    for k, (a, b) in enumerate(prod.graph.edges):
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        if i != j:
            left_color = alpha.colors[g.edge_id(i, j)]
            colors[k] = (left_color - 1) * stride + table[(p, q)]

    # the phase-1 ceiling at every vertex of copy i must equal max S(u_i) * (r+1),
    # otherwise stacking phase 2 on top of it would open a gap
    top = [0] * prod.graph.n
    for k, (a, b) in enumerate(prod.graph.edges):
        if colors[k]:
            if colors[k] > top[a]:
                top[a] = colors[k]
            if colors[k] > top[b]:
                top[b] = colors[k]
    for x in range(prod.graph.n):
        i, _ = prod.coords[x]
        if top[x] and top[x] != max_s[i] * stride:
            raise ConstructionFailed(
                f"phase-1 ceiling {top[x]} at vertex {x} differs from {max_s[i] * stride}"
            )

    for k, (a, b) in enumerate(prod.graph.edges):
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        if i == j:
            colors[k] = max_s[i] * stride + h_coloring.colors[h.edge_id(p, q)]
    return _finish(prod, colors, t * stride + r, "strong product construction")


def _lex_cross_color(alpha_color: int, n: int, p: int, q: int) -> int:
    """Minimal-variant color of a cross edge between copy slots p, q (0-based).

    Written with 1-based slot numbers p', q' in 1..n: slot pairs on the
    anti-diagonal p'+q' = n+1 take the block's top color alpha * n, everything
    else takes (alpha-1)*n + ((p'+q'-1) mod n), whose residue lands in 1..n-1.
    """
    s = (p + 1) + (q + 1)
    if s == n + 1:
        return alpha_color * n
    return (alpha_color - 1) * n + (s - 1) % n


def lex_empty_interval(
    g: Graph, alpha: EdgeColoring, n: int, variant: str = "w"
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval coloring of the lexicographic blow-up by n independent vertices.

    variant "w" uses t*n colors; variant "W" uses t*n + n - 1 colors (the
    widest this blow-up is guaranteed to reach when alpha is itself widest).
    """
    if n < 1:
        raise BadN(f"copy count must be >= 1, got {n}")
    if variant not in ("w", "W"):
        raise BadParameter(f"variant must be 'w' or 'W', got {variant!r}")
    t = prepare_input(g, alpha, n=n).t
    prod = product(ProductKind.LEXICOGRAPHIC, g, build_graph(n, []))
    colors: list[int] = []
    for a, b in prod.graph.edges:
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        left_color = alpha.colors[g.edge_id(i, j)]
        if variant == "w":
            colors.append(_lex_cross_color(left_color, n, p, q))
        else:
            colors.append((left_color - 1) * n + (p + 1) + (q + 1) - 1)
    expected = t * n if variant == "w" else t * n + n - 1
    return _finish(prod, colors, expected, f"lexicographic blow-up ({variant} variant)")


def lex_regular_interval(
    g: Graph, alpha: EdgeColoring, h: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval (t*n+r)-coloring of the lexicographic product with regular class-1 H.

    Cross edges take the blow-up colors lifted by r; each copy of H sits below
    its own cross block, anchored at (min S(u_i) - 1) * n.
    """
    inp = prepare_input(g, alpha, h)
    t, r, n = inp.t, inp.r, inp.n
    h_coloring = _interval_regular_coloring(h, budget)
    min_s, _ = _spectra_bounds(g, alpha)
    prod = product(ProductKind.LEXICOGRAPHIC, g, h)
    colors: list[int] = []
    for a, b in prod.graph.edges:
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        if i == j:
            colors.append((min_s[i] - 1) * n + h_coloring.colors[h.edge_id(p, q)])
        else:
            left_color = alpha.colors[g.edge_id(i, j)]
            colors.append(r + _lex_cross_color(left_color, n, p, q))
    return _finish(prod, colors, t * n + r, "lexicographic product construction")


def cartesian_interval(
    g: Graph, alpha_g: EdgeColoring, h: Graph, alpha_h: EdgeColoring
) -> tuple[ProductGraph, EdgeColoring]:
    """Interval coloring of the Cartesian product with at most t_g + t_h colors.

    Left-layer edges keep their left color shifted up by the fiber's minimum
    right color minus one; right-layer edges are shifted above the copy's
    maximum left color. At every vertex the two shifted spectra meet without
    overlap or gap.
    """
    t_g = _validated_alpha(g, alpha_g)
    t_h = _validated_alpha(h, alpha_h)
    min_h, _ = _spectra_bounds(h, alpha_h)
    _, max_g = _spectra_bounds(g, alpha_g)
    prod = product(ProductKind.CARTESIAN, g, h)
    colors: list[int] = []
    for a, b in prod.graph.edges:
        (i, p), (j, q) = prod.coords[a], prod.coords[b]
        if p == q:
            colors.append(alpha_g.colors[g.edge_id(i, j)] + min_h[p] - 1)
        else:
            colors.append(alpha_h.colors[h.edge_id(p, q)] + max_g[i])
    prod, coloring = _finish(prod, colors, len(set(colors)), "cartesian composition")
    if coloring.t > t_g + t_h:
        raise ConstructionFailed(
            f"cartesian composition used {coloring.t} colors, above {t_g} + {t_h}"
        )
    return prod, coloring


def torus_hamming_membership(dims: Sequence[int], kind: str) -> bool:
    """Parity decision: a torus or Hamming graph is interval colorable iff the
    product of its dimensions is even."""
    dims = tuple(dims)
    if kind == "torus":
        if len(dims) != 2:
            raise BadDims(f"a torus has exactly 2 dimensions, got {len(dims)}")
        if any(d < 2 for d in dims):
            raise BadDims(f"torus dimensions must be >= 2, got {dims}")
    elif kind == "hamming":
        if not dims:
            raise BadDims("a Hamming graph needs at least one dimension")
        if any(d < 2 for d in dims):
            raise BadDims(f"Hamming dimensions must be >= 2, got {dims}")
    else:
        raise BadParameter(f"kind must be 'torus' or 'hamming', got {kind!r}")
    parity = 1
    for d in dims:
        parity = parity * d % 2
    return parity == 0


@dataclass(frozen=True)
class BoundReport:
    """Exact evaluation of a known bound formula; never a claim of tightness."""

    kind: Optional[ProductKind]
    w_upper: Optional[int]
    W_lower: Optional[int]
    source: str


def _odd_decomposition(n: int) -> tuple[int, int]:
    """n = p * 2**q with p odd."""
    q = 0
    while n % 2 == 0:
        n //= 2
        q += 1
    return n, q


def _req(params: dict, *names: str) -> list:
    missing = [name for name in names if name not in params]
    if missing:
        raise MissingParameter(f"missing parameter(s) {', '.join(missing)}")
    return [params[name] for name in names]


def _path_degree(m: int) -> int:
    if m < 1:
        raise BadParameter(f"path length must be >= 1, got {m}")
    return 0 if m == 1 else (1 if m == 2 else 2)


def _exact_delta(family: str, dims: Sequence[int]) -> int:
    dims = tuple(dims)
    if family == "grid":
        if not dims:
            raise BadParameter("grid needs at least one dimension")
        return sum(_path_degree(d) for d in dims)
    if family == "cylinder":
        if len(dims) != 2:
            raise BadParameter("cylinder needs dimensions (m, k)")
        m, k = dims
        if k < 4 or k % 2:
            raise BadParameter(f"the cylinder result needs an even cycle >= 4, got {k}")
        return _path_degree(m) + 2
    if family == "torus":
        if len(dims) != 2:
            raise BadParameter("torus needs dimensions (a, b)")
        if any(d < 4 or d % 2 for d in dims):
            raise BadParameter(f"the torus result needs even dimensions >= 4, got {dims}")
        return 4
    raise BadParameter(f"no exact minimal-count result for family {family!r}")


def bound_report(theorem: str, **params) -> BoundReport:
    """Evaluate one of the known bound formulas.

    Product composition bounds (parameters w_g, W_g and r / n as needed):
      t2  cartesian      w <= w_g + w_h           W >= W_g + W_h
      t12 tensor         w <= w_g * r             W >= W_g * r
      t13 strong tensor  w <= w_g * (r+1)         W >= W_g * (r+1)
      t14 strong         w <= w_g * (r+1) + r     W >= W_g * (r+1) + r
      t16 lex blow-up    w <= w_g * n             W >= (W_g + 1) * n - 1
      t17 lex            w <= w_g * n + r         W >= W_g * n + r

    Family formulas:
      t3  family=..., dims=...   exact minimal count = max degree
      t4  m, n   cylinder on (m, 2n):      W >= 3m + n - 2
      t5  m, n   torus on (2m, 2n):        W >= max(3m + n, 3n + m)
      t6  n      hypercube:                W >= n(n+1)/2
      t7  n      complete graph on 2n:     W >= 4n - 2 - p - q  (n = p * 2**q)
      t8  n, k   Hamming power of K_{2n}:  minimal = (2n-1)k, W >= (4n-2-p-q)k
    """
    p = params
    if theorem == "t2":
        w_g, W_g, w_h, W_h = _req(p, "w_g", "W_g", "w_h", "W_h")
        return BoundReport(ProductKind.CARTESIAN, w_g + w_h, W_g + W_h, theorem)
    if theorem == "t12":
        w_g, W_g, r = _req(p, "w_g", "W_g", "r")
        return BoundReport(ProductKind.TENSOR, w_g * r, W_g * r, theorem)
    if theorem == "t13":
        w_g, W_g, r = _req(p, "w_g", "W_g", "r")
        return BoundReport(ProductKind.STRONG_TENSOR, w_g * (r + 1), W_g * (r + 1), theorem)
    if theorem == "t14":
        w_g, W_g, r = _req(p, "w_g", "W_g", "r")
        return BoundReport(
            ProductKind.STRONG, w_g * (r + 1) + r, W_g * (r + 1) + r, theorem
        )
    if theorem == "t16":
        w_g, W_g, n = _req(p, "w_g", "W_g", "n")
        return BoundReport(
            ProductKind.LEXICOGRAPHIC, w_g * n, (W_g + 1) * n - 1, theorem
        )
    if theorem == "t17":
        w_g, W_g, r, n = _req(p, "w_g", "W_g", "r", "n")
        return BoundReport(
            ProductKind.LEXICOGRAPHIC, w_g * n + r, W_g * n + r, theorem
        )
    if theorem == "t3":
        family, dims = _req(p, "family", "dims")
        delta = _exact_delta(family, dims)
        return BoundReport(ProductKind.CARTESIAN, delta, delta, theorem)
    if theorem == "t4":
        m, n = _req(p, "m", "n")
        if m < 1 or n < 2:
            raise BadParameter(f"cylinder bound needs m >= 1 and n >= 2, got {m},{n}")
        return BoundReport(ProductKind.CARTESIAN, None, 3 * m + n - 2, theorem)
    if theorem == "t5":
        m, n = _req(p, "m", "n")
        if m < 2 or n < 2:
            raise BadParameter(f"torus bound needs m, n >= 2, got {m},{n}")
        return BoundReport(
            ProductKind.CARTESIAN, None, max(3 * m + n, 3 * n + m), theorem
        )
    if theorem == "t6":
        (n,) = _req(p, "n")
        if n < 1:
            raise BadParameter(f"hypercube bound needs n >= 1, got {n}")
        return BoundReport(ProductKind.CARTESIAN, None, n * (n + 1) // 2, theorem)
    if theorem == "t7":
        (n,) = _req(p, "n")
        if n < 1:
            raise BadParameter(f"complete-graph bound needs n >= 1, got {n}")
        odd, q = _odd_decomposition(n)
        return BoundReport(None, None, 4 * n - 2 - odd - q, theorem)
    if theorem == "t8":
        n, k = _req(p, "n", "k")
        if n < 1 or k < 1:
            raise BadParameter(f"Hamming power bound needs n, k >= 1, got {n},{k}")
        odd, q = _odd_decomposition(n)
        return BoundReport(
            ProductKind.CARTESIAN,
            (2 * n - 1) * k,
            (4 * n - 2 - odd - q) * k,
            theorem,
        )
    raise BadParameter(f"unknown theorem id {theorem!r}")
