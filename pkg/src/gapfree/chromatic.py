"""Proper edge colorings feeding the interval constructions.

Two routes: bipartite regular graphs get an exact max-degree coloring by
peeling perfect matchings (each color class is one matching, so every vertex
ends up seeing all colors 1..r), and arbitrary small graphs get their exact
chromatic index by a pruned exhaustive search that tries the max degree first
and falls back to max degree + 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .colorings import EdgeColoring
from .errors import NotBipartite, NotRegular
from .graph import Graph, bfs_edge_order, degree_profile, is_bipartite
from .limits import DEFAULT_BUDGET, Budget

_INF = float("inf")


def _hopcroft_karp(left: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum matching on a bipartite graph, deterministic for equal inputs."""
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in left:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                z = match_r.get(w)
                if z is None:
                    reachable_free = True
                elif dist[z] == _INF:
                    dist[z] = dist[u] + 1
                    queue.append(z)
        return reachable_free

    def dfs(u: int) -> bool:
        for w in adj[u]:
            z = match_r.get(w)
            if z is None or (dist[z] == dist[u] + 1 and dfs(z)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in left:
            if u not in match_l:
                dfs(u)
    return match_l


def bipartite_regular_coloring(g: Graph) -> EdgeColoring:
    """Proper coloring of an r-regular bipartite graph with palette exactly 1..r.

    Peels one perfect matching per color; regular bipartite graphs always have
    one, and the residue stays regular, so the peeling never gets stuck. Every
    vertex is covered by each matching, hence sees every color: the result is
    automatically an interval r-coloring.
    """
    profile = degree_profile(g)
    if not profile.is_regular or not profile.regularity:
        raise NotRegular(f"need an r-regular graph with r >= 1, degrees {set(profile.degrees)}")
    ok, sides = is_bipartite(g)
    if not ok:
        raise NotBipartite("graph contains an odd cycle")
    r = profile.regularity
    left = [v for v in range(g.n) if sides[v] == 0]
    adj = {u: [w for w in g.adjacency[u]] for u in left}
    colors = [0] * g.m
    for k in range(1, r + 1):
        matching = _hopcroft_karp(left, adj)
        if len(matching) != len(left):
            raise AssertionError("perfect matching missing in a regular bipartite graph")
        for u in left:
            w = matching[u]
            colors[g.edge_id(u, w)] = k
            adj[u].remove(w)
    return EdgeColoring(tuple(colors))


@dataclass(frozen=True)
class ChromaticIndexResult:
    chi_prime: int
    witness: EdgeColoring
    class1: bool


def _search_proper(g: Graph, k: int, budget: Budget) -> list[int] | None:
    """First proper edge k-coloring in lexicographic order, or None.

    Edges are tried in descending degree-sum order (BFS rank breaking ties),
    new colors only in first-use order, and each color class is capped at the
    trivial matching bound floor(n/2).
    """
    m = g.m
    if m == 0:
        return []
    cap = g.n // 2
    if k * cap < m:
        return None
    rank = {e: i for i, e in enumerate(bfs_edge_order(g))}
    order = sorted(
        range(m),
        key=lambda e: (-(g.degrees[g.edges[e][0]] + g.degrees[g.edges[e][1]]), rank[e]),
    )
    used = [0] * g.n
    count = [0] * (k + 2)
    out = [0] * m

    def rec(pos: int, introduced: int) -> bool:
        budget.spend()
        if pos == m:
            return True
        e = order[pos]
        u, v = g.edges[e]
        mask = used[u] | used[v]
        limit = min(k, introduced + 1)
        for c in range(1, limit + 1):
            bit = 1 << c
            if mask & bit or count[c] == cap:
                continue
            used[u] |= bit
            used[v] |= bit
            count[c] += 1
            out[e] = c
            if rec(pos + 1, max(introduced, c)):
                return True
            used[u] ^= bit
            used[v] ^= bit
            count[c] -= 1
        return False

    return out if rec(0, 0) else None


def exact_chromatic_index(g: Graph, budget: int = DEFAULT_BUDGET) -> ChromaticIndexResult:
    """Exact chi' with a witness; raises BudgetExceeded when the search gives up.

    Only max degree and max degree + 1 are possible for simple graphs, so the
    search at max degree decides the class and the fallback always succeeds.
    """
    delta = g.max_degree
    if g.m == 0:
        return ChromaticIndexResult(0, EdgeColoring(()), True)
    tracker = Budget(budget)
    found = _search_proper(g, delta, tracker)
    if found is not None:
        return ChromaticIndexResult(delta, EdgeColoring(tuple(found)), True)
    found = _search_proper(g, delta + 1, tracker)
    if found is None:
        raise AssertionError("no (max degree + 1)-edge-coloring found; simple graphs always have one")
    return ChromaticIndexResult(delta + 1, EdgeColoring(tuple(found)), False)


def regular_membership(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether a regular graph admits an interval coloring: true iff chi' = max degree.

    Edgeless graphs are vacuously class 1 but admit no coloring that uses
    color 1, so they are reported as non-members.
    """
    profile = degree_profile(g)
    if not profile.is_regular:
        raise NotRegular(f"graph is not regular, degrees {set(profile.degrees)}")
    if g.m == 0:
        return False
    return exact_chromatic_index(g, budget).class1
