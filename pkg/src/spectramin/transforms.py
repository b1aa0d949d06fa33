"""Spectral-radius-modifying graph rewrites and the descent replay pipeline.

Each operation implements one radius law: edge deletion (strict decrease),
internal-path subdivision (strict decrease except on the double-fork tree),
vertex relocation into an internal path (delete + subdivide, order
preserved), neighbor shifting toward a larger Perron entry (strict
increase), and hub splitting along a cut edge (non-increase, equality only
in the fully symmetric degree-3 case).  ``proof_replay`` chains relocations
and deletions to walk an arbitrary dense-enough graph down onto a canonical
two-cycle family member with non-increasing radius, returning the trace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    InvalidInputError,
    InvalidParameterError,
    canonical_form,
    cut_edges,
    double_fork_tree,
    independence_number,
    internal_paths,
    is_connected,
    on_internal_path,
)
from .spectral import perron_pair, rho_numeric


class ExemptionError(InvalidParameterError):
    """The rewrite is refused because its radius law exempts this graph."""


@dataclass(frozen=True)
class RewriteStep:
    kind: str
    before: Graph
    after: Graph
    rho_before: float
    rho_after: float
    rule: str


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Remove one edge; on a connected graph this strictly lowers the radius."""
    if not is_connected(g):
        raise InvalidInputError("delete_edge requires a connected graph")
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidParameterError(f"edge ({u},{v}) not in graph")
    return g.without_edge(u, v)


def _is_double_fork(g: Graph) -> bool:
    if g.n < 6:
        return False
    degs = sorted(g.degrees())
    if degs != [1, 1, 1, 1] + [2] * (g.n - 6) + [3, 3]:
        return False
    return canonical_form(g) == canonical_form(double_fork_tree(g.n))


def subdivide_internal(g: Graph, e: tuple[int, int]) -> Graph:
    """Insert a degree-2 vertex into an internal-path edge.

    Strictly lowers the radius for every graph except the double-fork tree,
    whose radius is pinned at 2; that input is refused.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidParameterError(f"edge ({u},{v}) not in graph")
    if not on_internal_path(g, (u, v)):
        raise InvalidParameterError(f"edge ({u},{v}) is not on an internal path")
    if _is_double_fork(g):
        raise ExemptionError(
            "refused: subdividing the double-fork tree keeps its radius at 2, "
            "the single exemption to the strict-decrease rule"
        )
    return g.without_edge(u, v).with_vertex([u, v])


def relocate_vertex(g: Graph, v: int, target: tuple[int, int]) -> Graph:
    """Delete ``v`` and reinsert it by subdividing ``target``; order unchanged.

    ``target`` is named in ``g``'s indexing (endpoints must differ from
    ``v``) and must be an internal-path edge once ``v`` is gone.  Combining
    interlacing with the subdivision law, the radius strictly drops.
    """
    a, b = target
    if v in (a, b):
        raise InvalidParameterError("target edge must not touch the relocated vertex")
    h = g.without_vertex(v)
    if not is_connected(h):
        raise InvalidParameterError(f"removing vertex {v} disconnects the graph")
    a2 = a - (a > v)
    b2 = b - (b > v)
    return subdivide_internal(h, (a2, b2))


def shift_neighbors(g: Graph, u: int, v: int, subset) -> Graph:
    """Move the edges from ``v`` to ``subset`` over to ``u``.

    ``subset`` must be nonempty, inside N(v) \\ N(u), and must not contain
    ``u``.  When the Perron entry of ``u`` is at least that of ``v`` the
    radius strictly increases.
    """
    s = sorted(set(subset))
    if not s:
        raise InvalidParameterError("subset must be nonempty")
    if u in s:
        raise InvalidParameterError("subset must not contain the receiving vertex")
    nv = set(g.neighbors(v))
    nu = set(g.neighbors(u))
    for w in s:
        if w not in nv or w in nu:
            raise InvalidParameterError(f"vertex {w} is not in N(v) minus N(u)")
    out = g
    for w in s:
        out = out.without_edge(v, w).with_edge(u, w)
    return out


def split_vertex(g: Graph, v: int, first_side, perron_margin: float = 1e-9) -> Graph:
    """Split hub ``v`` along a cut edge into two vertices sharing that anchor.

    ``first_side`` is the neighbor set of the first replacement vertex; it
    must contain the cut-edge anchor ``w1`` (the minimum-Perron neighbor of
    ``v``, checked numerically) and leave at least one neighbor for the
    second replacement vertex, which is wired to the anchor plus the rest.
    The radius never increases; with degree 3 and equal neighbor entries it
    is preserved, which is exactly the dumbbell move
    B(m, p, q) -> B(m, p-1, q+2) at the path-side hub.
    """
    side = sorted(set(first_side))
    nv = list(g.neighbors(v))
    t = len(nv)
    if t < 3:
        raise InvalidParameterError(f"split vertex must have degree >= 3, got {t}")
    if not 2 <= len(side) <= t - 1:
        raise InvalidParameterError(
            f"first side must keep between 2 and {t - 1} neighbors, got {len(side)}"
        )
    if any(w not in nv for w in side):
        raise InvalidParameterError("first side must be a subset of N(v)")
    x = perron_pair(g).perron
    w1 = min(nv, key=lambda w: (x[w], w))
    if w1 not in side:
        raise InvalidParameterError(
            f"first side must contain the minimum-Perron neighbor {w1}"
        )
    if any(x[w1] > x[w] + perron_margin for w in nv):
        raise InvalidParameterError("anchor does not attain the minimum Perron entry")
    bridges = set(cut_edges(g))
    if (min(v, w1), max(v, w1)) not in bridges:
        raise InvalidParameterError(f"edge ({v},{w1}) is not a cut edge")
    rest = [w for w in nv if w not in side]
    rows = list(g.rows)
    # v keeps the first side, the appended vertex takes the anchor plus the rest
    for w in nv:
        rows[w] &= ~(1 << v)
        rows[v] &= ~(1 << w)
    out = Graph.from_rows(g.n, rows)
    for w in side:
        out = out.with_edge(v, w)
    return out.with_vertex([w1] + rest)


# ---------------------------------------------------------------------------
# descent replay


def _shortest_cycle_through(g: Graph, e: tuple[int, int]) -> tuple[int, ...] | None:
    """Shortest cycle containing edge ``e`` as a vertex tuple, or None."""
    u, v = e
    h = g.without_edge(u, v)
    prev = {u: -1}
    frontier = [u]
    while frontier and v not in prev:
        nxt = []
        for a in frontier:
            for b in h.neighbors(a):
                if b not in prev:
                    prev[b] = a
                    nxt.append(b)
        frontier = nxt
    if v not in prev:
        return None
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    return tuple(path)


def _cycle_edges(cyc: tuple[int, ...]) -> set[frozenset]:
    es = {frozenset((cyc[i], cyc[i + 1])) for i in range(len(cyc) - 1)}
    es.add(frozenset((cyc[-1], cyc[0])))
    return es


def _connecting_path(g: Graph, avoid: set[int], src: set[int], dst: set[int]):
    """Shortest path between two vertex sets with interior outside both."""
    prev: dict[int, int] = {s: -1 for s in src}
    frontier = sorted(src)
    while frontier:
        nxt = []
        for a in frontier:
            for b in g.neighbors(a):
                if b in prev:
                    continue
                if b in dst:
                    path = [b, a]
                    while path[-1] not in src:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                if b not in avoid:
                    prev[b] = a
                    nxt.append(b)
        frontier = sorted(nxt)
    return None


def _theta_from_pair(c1: tuple[int, ...], c2: tuple[int, ...]):
    """Minimal theta inside the union of two cycles sharing >= 2 vertices.

    Takes the shortest arc of ``c1`` whose interior avoids ``c2`` and whose
    edge is not itself a ``c2`` edge; its endpoints split ``c2`` into two
    more internally disjoint paths.  Returns (params, verts, edges) or None.
    """
    s2 = set(c2)
    e2 = _cycle_edges(c2)
    n1 = len(c1)
    hits = [i for i in range(n1) if c1[i] in s2]
    best = None
    for a_i in range(len(hits)):
        i0 = hits[a_i]
        i1 = hits[(a_i + 1) % len(hits)]
        length = (i1 - i0) % n1
        if length == 0:
            continue
        x, y = c1[i0], c1[i1]
        if x == y:
            continue
        if length == 1 and frozenset((x, y)) in e2:
            continue
        if best is None or length < best[0]:
            arc = tuple(c1[(i0 + k) % n1] for k in range(length + 1))
            best = (length, x, y, arc)
    if best is None:
        return None
    length, x, y, arc = best
    j0, j1 = c2.index(x), c2.index(y)
    d = (j1 - j0) % len(c2)
    params = tuple(sorted((length, d, len(c2) - d)))
    verts = set(arc) | s2
    edges = e2 | {frozenset(pp) for pp in zip(arc, arc[1:])}
    return params, verts, edges


def find_minimal_bicyclic_core(g: Graph):
    """Smallest two-cycle subgraph: (family, params, vertex set, edge set).

    Short cycles are collected per edge (shortest cycle through each) and
    classified pairwise into shared-vertex (figure-eight), shared-stretch
    (theta), or disjoint (dumbbell, via a shortest connecting path)
    candidates, keeping the smallest total length, ties broken on family
    then the normalized parameter triple.
    """
    if g.edge_count < g.n + 1:
        raise InvalidInputError("a two-cycle subgraph needs at least n + 1 edges")
    pool = []
    seen_cycles = set()
    for e in g.edges():
        cyc = _shortest_cycle_through(g, e)
        if cyc is None:
            continue
        key = frozenset(cyc)
        if key not in seen_cycles:
            seen_cycles.add(key)
            pool.append(cyc)
    best = None
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            c1, c2 = pool[i], pool[j]
            s1, s2 = set(c1), set(c2)
            inter = s1 & s2
            if not inter:
                path = _connecting_path(g, s1 | s2, s1, s2)
                if path is None:
                    continue
                m, p, q = len(c1), len(path) - 1, len(c2)
                if m > q:
                    m, q = q, m
                verts = s1 | s2 | set(path)
                edges = _cycle_edges(c1) | _cycle_edges(c2)
                edges |= {frozenset(pp) for pp in zip(path, path[1:])}
                cand = (len(c1) + len(c2) + p, 2, (m, p, q), "B", verts, edges)
            elif len(inter) == 1:
                m, q = sorted((len(c1), len(c2)))
                verts = s1 | s2
                edges = _cycle_edges(c1) | _cycle_edges(c2)
                cand = (m + q, 0, (m, 0, q), "C", verts, edges)
            else:
                theta = _theta_from_pair(c1, c2)
                if theta is None:
                    theta = _theta_from_pair(c2, c1)
                if theta is None:
                    continue
                params, verts, edges = theta
                cand = (sum(params), 1, params, "P", verts, edges)
            if best is None or cand[:3] < best[:3]:
                best = cand
    if best is None:
        raise InvalidInputError("no pair of cycles found")
    _, _, params, family, verts, edges = best
    return family, params, verts, edges


def _farthest_outside(g: Graph, core: set[int]) -> int:
    """Outside vertex at maximum BFS distance from the core (ties: max index)."""
    dist = {v: 0 for v in core}
    frontier = sorted(core)
    far = -1
    far_d = -1
    while frontier:
        nxt = []
        for a in frontier:
            for b in g.neighbors(a):
                if b not in dist:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
                    if dist[b] > far_d or (dist[b] == far_d and b > far):
                        far_d = dist[b]
                        far = b
        frontier = sorted(nxt)
    return far


def _core_subdivision_target(g: Graph, core: set[int]) -> tuple[int, int]:
    """Edge of the longest internal path of the induced core, deterministic."""
    verts = sorted(core)
    sub = g.subgraph(verts)
    paths = internal_paths(sub)
    if not paths:
        raise InvalidInputError("core has no internal path to extend")
    longest = max(len(p) for p in paths)
    path = min(p for p in paths if len(p) == longest)
    a, b = path[0], path[1]
    return verts[a], verts[b]


def proof_replay(g: Graph, tol: float = 1e-10) -> list[RewriteStep]:
    """Monotone descent from ``g`` onto a two-cycle family member.

    Requires a connected graph with at least n + 1 edges whose independence
    number is ceil(n/2) - 1.  Picks a minimal two-cycle core, deletes
    non-core edges between core vertices, then repeatedly relocates the
    outside vertex farthest from the core into the core's longest internal
    path.  Every step is radius-non-increasing (checked numerically); the
    final graph is the core with all spare vertices absorbed as
    subdivisions, i.e. a family member of full order.
    """
    if not is_connected(g):
        raise InvalidInputError("replay requires a connected graph")
    if g.edge_count < g.n + 1:
        raise InvalidInputError(
            f"replay requires at least {g.n + 1} edges, got {g.edge_count}"
        )
    alpha = independence_number(g)
    want = (g.n + 1) // 2 - 1
    if alpha != want:
        raise InvalidInputError(
            f"replay requires independence number {want}, got {alpha}"
        )
    _, _, core_verts, core_edges = find_minimal_bicyclic_core(g)
    core = set(core_verts)
    steps: list[RewriteStep] = []
    cur = g
    while True:
        extras = [
            (u, v)
            for (u, v) in cur.edges()
            if u in core and v in core and frozenset((u, v)) not in core_edges
        ]
        if not extras:
            break
        e = min(extras)
        nxt = delete_edge(cur, e)
        steps.append(
            RewriteStep("delete-edge", cur, nxt, rho_numeric(cur), rho_numeric(nxt),
                        "edge-deletion")
        )
        cur = nxt
    while len(core) < cur.n:
        v = _farthest_outside(cur, core)
        target = _core_subdivision_target(cur, core)
        nxt = relocate_vertex(cur, v, target)
        steps.append(
            RewriteStep("relocate-vertex", cur, nxt, rho_numeric(cur),
                        rho_numeric(nxt), "relocation-into-internal-path")
        )
        # reindex the core and its edge set below the removed vertex
        core = {u - (u > v) for u in core}
        core_edges = {
            frozenset((a - (a > v), b - (b > v))) for e2 in core_edges for a, b in [tuple(e2)]
        }
        a2, b2 = target[0] - (target[0] > v), target[1] - (target[1] > v)
        w = nxt.n - 1
        core_edges.discard(frozenset((a2, b2)))
        core_edges.add(frozenset((a2, w)))
        core_edges.add(frozenset((w, b2)))
        core.add(w)
        cur = nxt
    for st in steps:
        if st.rho_after > st.rho_before + tol:
            raise InvalidInputError(
                f"non-monotone step {st.kind}: {st.rho_before} -> {st.rho_after}"
            )
    return steps


def serialize_trace(steps: list[RewriteStep]) -> str:
    """Line log: kind, rule, radius before/after, graph6 of the result."""
    from .formats import to_graph6

    lines = []
    for st in steps:
        lines.append(
            f"{st.kind}\t{st.rule}\t{st.rho_before:.12g}\t{st.rho_after:.12g}\t"
            f"{to_graph6(st.after)}"
        )
    return "\n".join(lines)
