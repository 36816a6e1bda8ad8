"""Exhaustive ground truth for small graphs: interval-colorability, the least
and greatest feasible color counts, and witness colorings.

The search walks edges in BFS order assigning colors 1..t ascending, pruning a
branch as soon as some endpoint's partial spectrum can no longer extend to a
degree-length interval inside [1, t], or too few edges remain to cover the
still-unused colors. Colorings are probed for every t from the max degree up
to a proven ceiling, so "no result" means "no such coloring exists", not
"gave up" -- giving up is a distinct budget-exceeded state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .colorings import EdgeColoring
from .errors import BudgetExceeded
from .graph import Graph, bfs_edge_order
from .limits import DEFAULT_BUDGET, Budget

COMPLETE = "complete"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleResult:
    """member/w/W are None where the verdict is unknown (budget exceeded)."""

    member: Optional[bool]
    w: Optional[int]
    W: Optional[int]
    witnesses: dict[int, EdgeColoring] = field(default_factory=dict)
    nodes_explored: int = 0
    status: str = COMPLETE


def _interval_search(g: Graph, t: int, budget: Budget) -> Optional[EdgeColoring]:
    m = g.m
    if t < 1 or t < g.max_degree or t > m:
        # properness needs t >= max degree; using every color needs t <= |E|
        return None
    order = bfs_edge_order(g)
    deg = g.degrees
    edges = g.edges
    used = [0] * g.n  # bitmask of colors at each vertex
    lo = [0] * g.n  # 0 means no incident edge colored yet
    hi = [0] * g.n
    count = [0] * (t + 1)
    out = [0] * m
    state = {"unused": t}

    def rec(pos: int) -> bool:
        budget.spend()
        if pos == m:
            return state["unused"] == 0
        e = order[pos]
        u, v = edges[e]
        mask = used[u] | used[v]
        lo_b, hi_b = 1, t
        for w in (u, v):
            if lo[w]:
                if hi[w] - deg[w] + 1 > lo_b:
                    lo_b = hi[w] - deg[w] + 1
                if lo[w] + deg[w] - 1 < hi_b:
                    hi_b = lo[w] + deg[w] - 1
        remaining = m - pos - 1
        for c in range(lo_b, hi_b + 1):
            if mask & (1 << c):
                continue
            first_use = count[c] == 0
            if state["unused"] - (1 if first_use else 0) > remaining:
                continue
            save = (lo[u], hi[u], lo[v], hi[v])
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            count[c] += 1
            if first_use:
                state["unused"] -= 1
            for w in (u, v):
                if lo[w] == 0:
                    lo[w] = hi[w] = c
                else:
                    if c < lo[w]:
                        lo[w] = c
                    if c > hi[w]:
                        hi[w] = c
            out[e] = c
            if rec(pos + 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
            count[c] -= 1
            if first_use:
                state["unused"] += 1
            lo[u], hi[u], lo[v], hi[v] = save
        return False

    return EdgeColoring(tuple(out)) if rec(0) else None


def find_interval_coloring(
    g: Graph, t: int, budget: int = DEFAULT_BUDGET
) -> Optional[EdgeColoring]:
    """First interval t-coloring in search order, or None if provably absent.

    Raises BudgetExceeded when the search gives up, so None is always a proof.
    """
    return _interval_search(g, t, Budget(budget))


def search_ceiling(g: Graph) -> int:
    """Largest t worth probing: the 2|V|-4 bound (2|V|-3 below 3 vertices),
    never below the max degree, capped at |E| since every color needs an edge."""
    raw = 2 * g.n - 4 if g.n >= 3 else 2 * g.n - 3
    return min(max(g.max_degree, raw), g.m)


def oracle(g: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exact membership, least and greatest feasible t, and witnesses.

    For regular graphs the feasible t values form a contiguous range starting
    at the max degree, so the scan stops at the first failure; non-regular
    graphs get every t probed up to the ceiling.
    """
    if g.m == 0:
        return OracleResult(member=False, w=None, W=None)
    tracker = Budget(budget)
    delta = g.max_degree
    ceiling = search_ceiling(g)
    regular = len(set(g.degrees)) == 1
    feasible: list[int] = []
    witnesses: dict[int, EdgeColoring] = {}
    try:
        for t in range(delta, ceiling + 1):
            found = _interval_search(g, t, tracker)
            if found is not None:
                feasible.append(t)
                witnesses[t] = found
            elif regular:
                break
    except BudgetExceeded:
        # every t below the interrupted probe completed, so a found minimum
        # is the true least value; the rest stays unknown
        return OracleResult(
            member=True if feasible else None,
            w=feasible[0] if feasible else None,
            W=None,
            witnesses=witnesses,
            nodes_explored=tracker.used,
            status=BUDGET_EXCEEDED,
        )
    if feasible:
        return OracleResult(
            member=True,
            w=feasible[0],
            W=feasible[-1],
            witnesses=witnesses,
            nodes_explored=tracker.used,
            status=COMPLETE,
        )
    return OracleResult(
        member=False, w=None, W=None, witnesses={},
        nodes_explored=tracker.used, status=COMPLETE,
    )


@dataclass(frozen=True)
class CrossCheckReport:
    consistent: bool
    construction_t: int
    oracle_w: Optional[int]
    oracle_W: Optional[int]
    oracle_status: str
    notes: tuple[str, ...]


def cross_validate(coloring: EdgeColoring, bracket: OracleResult) -> CrossCheckReport:
    """Check a construction's color count against an oracle bracket for the
    same graph. Any contradiction is a build-breaking defect, reported as data."""
    t = coloring.t
    notes: list[str] = []
    consistent = True
    if bracket.member is False:
        consistent = False
        notes.append("oracle proves non-membership yet a construction produced a coloring")
    if bracket.w is not None and bracket.w > t:
        consistent = False
        notes.append(f"oracle least count {bracket.w} exceeds construction count {t}")
    if bracket.status == COMPLETE and bracket.W is not None and t > bracket.W:
        consistent = False
        notes.append(f"construction count {t} exceeds oracle greatest count {bracket.W}")
    if bracket.status != COMPLETE:
        notes.append("oracle bracket is partial (budget exceeded)")
    return CrossCheckReport(consistent, t, bracket.w, bracket.W, bracket.status, tuple(notes))


def _naive_exists(g: Graph, t: int) -> bool:
    """Generate-and-filter: enumerate proper colorings (edge id order, colors
    descending), keep one iff it is an interval t-coloring."""
    at_vertex: list[set[int]] = [set() for _ in range(g.n)]
    colors = [0] * g.m

    def leaf_ok() -> bool:
        if set(colors) != set(range(1, t + 1)):
            return False
        for v in range(g.n):
            spect = sorted(at_vertex[v])
            if spect and spect[-1] - spect[0] + 1 != len(spect):
                return False
        return True

    def rec(e: int) -> bool:
        if e == g.m:
            return leaf_ok()
        u, v = g.edges[e]
        for c in range(t, 0, -1):
            if c in at_vertex[u] or c in at_vertex[v]:
                continue
            at_vertex[u].add(c)
            at_vertex[v].add(c)
            colors[e] = c
            if rec(e + 1):
                return True
            at_vertex[u].remove(c)
            at_vertex[v].remove(c)
        return False

    return rec(0)


def naive_oracle(g: Graph) -> tuple[bool, Optional[int], Optional[int]]:
    """Slow reference verdict (member, least t, greatest t) for tiny graphs.

    Independent of the pruned search: different edge order, different color
    order, and only the trivial ceiling t <= |E|. Intended for cross-checking
    in tests; cost grows violently past a dozen edges.
    """
    feasible = [t for t in range(1, g.m + 1) if _naive_exists(g, t)]
    if feasible:
        return True, feasible[0], feasible[-1]
    return False, None, None
