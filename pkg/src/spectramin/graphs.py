"""Immutable simple graphs, the named graph families, and exact structure predicates.

Vertices are always ``0..n-1`` and adjacency is kept as one integer bitmask
per vertex, which makes the hot paths (canonical labeling, independence
number, enumeration) cheap in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

_INF_ROW = 1 << 512  # sentinel larger than any packed adjacency row


class InvalidParameterError(ValueError):
    """Arguments fall outside an operation's documented domain."""


class InvalidInputError(ValueError):
    """An input graph violates an operation's preconditions."""


# ---------------------------------------------------------------------------
# core graph type


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbor bitmask of ``v`` (bit ``u`` set iff ``uv`` is
    an edge).  Instances are immutable and hashable; operations that "modify"
    a graph return a new one.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidParameterError(f"graph order must be >= 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Wrap prevalidated bitmask rows (trusted fast path for generators)."""
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(rows)
        g._hash = None
        return g

    # -- queries ------------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                a[u, v] = 1.0
        return a

    # -- functional edits ---------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameterError(f"bad edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidParameterError(f"edge ({u},{v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(self.n, rows)

    def with_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        k = self.n
        rows = list(self.rows)
        mask = 0
        for u in neighbors:
            if not 0 <= u < k:
                raise InvalidParameterError(f"neighbor {u} out of range")
            mask |= 1 << u
            rows[u] |= 1 << k
        rows.append(mask)
        return Graph.from_rows(k + 1, rows)

    def without_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} out of range")
        if self.n == 1:
            raise InvalidParameterError("cannot delete the last vertex")
        return Graph.from_rows(self.n - 1, _delete_vertex_rows(self.rows, v))

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is ``vertices[i]``."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise InvalidParameterError("duplicate vertices in subgraph selection")
        rows = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in _bits(self.rows[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph.from_rows(len(vs), rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabeled copy where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in _bits(self.rows[v]):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph.from_rows(self.n, rows)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _delete_vertex_rows(rows: Sequence[int], v: int) -> list[int]:
    low = (1 << v) - 1
    out = []
    for u, r in enumerate(rows):
        if u == v:
            continue
        out.append((r & low) | ((r >> (v + 1)) << v))
    return out


# ---------------------------------------------------------------------------
# connectivity, blocks, paths


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single component (one vertex counts)."""
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def connected_components(g: Graph) -> list[int]:
    """Component bitmasks, ordered by smallest member."""
    rows = g.rows
    left = (1 << g.n) - 1
    comps = []
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= rows[b.bit_length() - 1]
                m ^= b
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def cut_edges(g: Graph) -> list[tuple[int, int]]:
    """All bridges of a connected graph, sorted. Iterative low-link DFS."""
    if not is_connected(g):
        raise InvalidInputError("cut_edges requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    bridges = []
    timer = 0
    stack = [(0, -1, iter(g.neighbors(0)))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, pv, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                parent_edge[u] = v
                stack.append((u, v, iter(g.neighbors(u))))
                advanced = True
                break
            elif u != pv:
                if disc[u] < low[v]:
                    low[v] = disc[u]
        if not advanced:
            stack.pop()
            if pv != -1:
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] > disc[pv]:
                    bridges.append((min(pv, v), max(pv, v)))
    return sorted(bridges)


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (per component)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                elif u != pv and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if not advanced:
                stack.pop()
                if pv != -1:
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] >= disc[pv]:
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (pv, v):
                                break
                        blocks.append(block)
    return blocks


def cycles_mutually_disjoint(g: Graph) -> bool:
    """True iff no two cycles share a vertex.

    Block form: every biconnected block must be a single edge or a chordless
    cycle (blocks with more edges than vertices hold two cycles sharing a
    path), and no vertex may sit on two cycle blocks (cycles meeting at a
    cut vertex, the figure-eight case).
    """
    if not is_connected(g):
        raise InvalidInputError("cycles_mutually_disjoint requires a connected graph")
    cycle_hits = [0] * g.n
    for block in _biconnected_blocks(g):
        verts = {v for e in block for v in e}
        if len(block) > len(verts):
            return False
        if len(block) == len(verts):  # this block is a cycle
            for v in verts:
                cycle_hits[v] += 1
                if cycle_hits[v] > 1:
                    return False
    return True


def internal_paths(g: Graph) -> list[tuple[int, ...]]:
    """Maximal paths with endpoints of degree >= 3 and interior degree 2.

    Closed walks (equal endpoints) and the degenerate two-adjacent-branch-
    vertices case are included.  Each path appears once, in a canonical
    orientation, sorted.
    """
    deg = g.degrees()
    found = set()
    for s in range(g.n):
        if deg[s] < 3:
            continue
        for t in g.neighbors(s):
            seq = [s, t]
            while deg[seq[-1]] == 2:
                a, b = g.neighbors(seq[-1])
                seq.append(b if a == seq[-2] else a)
            if deg[seq[-1]] >= 3:
                tup = tuple(seq)
                found.add(min(tup, tuple(reversed(tup))))
    return sorted(found)


def on_internal_path(g: Graph, edge: tuple[int, int]) -> bool:
    """True iff the edge lies on some internal path of ``g``."""
    u, v = edge
    for path in internal_paths(g):
        for a, b in zip(path, path[1:]):
            if (a, b) == (u, v) or (a, b) == (v, u):
                return True
    return False


# ---------------------------------------------------------------------------
# independence number


def independence_number(g: Graph) -> int:
    """Exact maximum independent set size.

    Pendant and isolated vertices are eliminated first (a leaf can always be
    taken into some maximum independent set), components are solved
    separately, and the remainder runs a memoized include/exclude branch on a
    maximum-degree vertex with a closed form once every degree drops to 2.
    """
    rows = g.rows
    alive = (1 << g.n) - 1
    alpha = 0
    while True:
        reduced = False
        m = alive
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            nb = rows[v] & alive
            d = nb.bit_count()
            if d == 0:
                alpha += 1
                alive ^= b
                reduced = True
            elif d == 1:
                alpha += 1
                alive &= ~(b | nb)
                reduced = True
                break
        if not reduced:
            break
    if not alive:
        return alpha
    memo: dict[int, int] = {}
    for comp in _mask_components(rows, alive):
        alpha += _mis(rows, comp, memo)
    return alpha


def _mask_components(rows: Sequence[int], alive: int) -> list[int]:
    comps = []
    left = alive
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= rows[b.bit_length() - 1]
                m ^= b
            frontier = nxt & alive & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


def _mis(rows: Sequence[int], mask: int, memo: dict[int, int]) -> int:
    if mask == 0:
        return 0
    cached = memo.get(mask)
    if cached is not None:
        return cached
    best_v = -1
    best_d = -1
    m = mask
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        d = (rows[v] & mask).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    if best_d <= 2:
        r = _mis_paths_cycles(rows, mask)
    else:
        bit = 1 << best_v
        r = max(
            _mis(rows, mask & ~bit, memo),
            1 + _mis(rows, mask & ~(rows[best_v] | bit), memo),
        )
    memo[mask] = r
    return r


def _mis_paths_cycles(rows: Sequence[int], mask: int) -> int:
    """alpha of an induced subgraph with max degree <= 2 (paths and cycles)."""
    total = 0
    for comp in _mask_components(rows, mask):
        k = comp.bit_count()
        e = 0
        m = comp
        while m:
            b = m & -m
            m ^= b
            e += (rows[b.bit_length() - 1] & comp).bit_count()
        e //= 2
        total += k // 2 if e == k else (k + 1) // 2
    return total


# ---------------------------------------------------------------------------
# canonical labeling (refinement + pruned minimal-encoding search)


def _refined_colors(n: int, rows: Sequence[int]) -> list[int]:
    """Relabeling-invariant vertex colors from iterated neighborhood refinement."""
    nbrs = [_bits(rows[i]) for i in range(n)]
    keys: list = [len(nb) for nb in nbrs]
    uniq = sorted(set(keys))
    rank = {k: r for r, k in enumerate(uniq)}
    colors = [rank[k] for k in keys]
    nclasses = len(uniq)
    while nclasses < n:
        keys = [(colors[i], tuple(sorted(colors[j] for j in nbrs[i]))) for i in range(n)]
        uniq = sorted(set(keys))
        if len(uniq) == nclasses:
            break
        rank = {k: r for r, k in enumerate(uniq)}
        colors = [rank[k] for k in keys]
        nclasses = len(uniq)
    return colors


def _canon(n: int, rows: Sequence[int]) -> tuple[bytes, tuple[int, ...]]:
    """Canonical form and labeling.

    Searches for the minimal packed adjacency encoding over all orderings
    that respect the refined color classes; automorphisms discovered along
    the way prune equivalent root branches.  Returns ``(form, perm)`` with
    ``perm[i]`` the input vertex at canonical position ``i``; two graphs get
    equal forms iff they are isomorphic.
    """
    colors = _refined_colors(n, rows)
    order = sorted(range(n), key=lambda v: (colors[v], v))
    cells: list[list[int]] = []
    for v in order:
        if cells and colors[cells[-1][0]] == colors[v]:
            cells[-1].append(v)
        else:
            cells.append([v])

    if all(len(c) == 1 for c in cells):
        perm = tuple(order)
        return _pack_form(n, rows, perm), perm

    # flat list of vertices in cells strictly after index ci
    tails: list[list[int]] = [[] for _ in cells]
    for i in range(len(cells) - 2, -1, -1):
        tails[i] = cells[i + 1] + tails[i + 1]

    best_rows = [_INF_ROW] * n
    best_perm: list[int] = [0] * n
    best_complete = False
    # union-find over vertices for root-level orbit pruning
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    placed: list[int] = []
    tried_roots: list[int] = []

    def search(ci: int, rem: list[int], rv: list[int], equal_so_far: bool) -> None:
        nonlocal best_complete
        pos = len(placed)
        if pos == n:
            if equal_so_far and best_complete:
                # same encoding reached twice: best_perm -> placed is an automorphism
                for i in range(n):
                    a, b = find(best_perm[i]), find(placed[i])
                    if a != b:
                        uf[a] = b
            else:
                best_perm[:] = placed
                best_complete = True
            return
        if not rem:
            search(ci + 1, list(cells[ci + 1]), rv, equal_so_far)
            return
        at_root = pos == 0
        cands = sorted(rem, key=lambda v: rv[v])
        tried: list[int] = []
        for v in cands:
            if at_root and any(find(v) == find(w) for w in tried_roots):
                continue
            rv_v = rv[v]
            skip = False
            for w in tried:
                # twins: swapping v and w is an automorphism fixing everything
                # else, so the w-subtree already covered this branch
                if rv[w] == rv_v and rows[v] & ~(1 << w) == rows[w] & ~(1 << v):
                    skip = True
                    break
            if skip:
                continue
            x = rv_v
            b = best_rows[pos]
            if x > b:
                break  # candidates are sorted ascending
            if x < b:
                best_rows[pos] = x
                for j in range(pos + 1, n):
                    best_rows[j] = _INF_ROW
                best_complete = False
                eq = False
            else:
                eq = equal_so_far
            if at_root:
                tried_roots.append(v)
            tried.append(v)
            placed.append(v)
            rem2 = [u for u in rem if u != v]
            rv2 = rv[:]
            for u in rem2:
                rv2[u] = (rv2[u] << 1) | ((rows[u] >> v) & 1)
            for u in tails[ci]:
                rv2[u] = (rv2[u] << 1) | ((rows[u] >> v) & 1)
            search(ci, rem2, rv2, eq)
            placed.pop()

    search(0, list(cells[0]), [0] * n, True)

    perm = tuple(best_perm)
    return _pack_form(n, rows, perm), perm


def _pack_form(n: int, rows: Sequence[int], perm: Sequence[int]) -> bytes:
    width = (n + 7) // 8
    out = bytearray(n.to_bytes(2, "big"))
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    for i in range(n):
        m = 0
        r = rows[perm[i]]
        while r:
            bbit = r & -r
            m |= 1 << inv[bbit.bit_length() - 1]
            r ^= bbit
        out += m.to_bytes(width, "big")
    return bytes(out)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: equal iff graphs are isomorphic."""
    return _canon(g.n, g.rows)[0]


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation ``perm`` with ``perm[i]`` = vertex at canonical position ``i``."""
    return _canon(g.n, g.rows)[1]


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples (``sigma[v]`` = image of ``v``).

    Backtracking over color-respecting assignments; meant for the small
    structured graphs (family cores) where the group is tiny.
    """
    n = g.n
    rows = g.rows
    colors = _refined_colors(n, rows)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    image = [-1] * n
    used = 0
    out: list[tuple[int, ...]] = []

    def rec(v: int) -> None:
        nonlocal used
        if v == n:
            out.append(tuple(image))
            return
        for w in by_color[colors[v]]:
            if (used >> w) & 1:
                continue
            ok = True
            for u in _bits(rows[v] & ((1 << v) - 1)):
                if not (rows[w] >> image[u]) & 1:
                    ok = False
                    break
            if ok and (rows[v] & ((1 << v) - 1)).bit_count() == (
                rows[w] & used
            ).bit_count():
                image[v] = w
                used |= 1 << w
                rec(v + 1)
                used &= ~(1 << w)
                image[v] = -1

    rec(0)
    return out


# ---------------------------------------------------------------------------
# named families


def build_cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def build_join_extremal(n: int, alpha: int) -> Graph:
    """Clique on ``n - alpha`` vertices completely joined to ``alpha`` isolated ones."""
    if not 1 <= alpha <= n - 1:
        raise InvalidParameterError(f"need 1 <= alpha <= n-1, got n={n}, alpha={alpha}")
    c = n - alpha
    edges = [(i, j) for i in range(c) for j in range(i + 1, c)]
    edges += [(i, j) for i in range(c) for j in range(c, n)]
    return Graph(n, edges)


def double_fork_tree(n: int) -> Graph:
    """Two degree-3 fork vertices joined by a path, two leaves on each end.

    The unique tree exempt from the rule that subdividing an internal path
    strictly lowers the spectral radius; its radius stays exactly 2.
    """
    if n < 6:
        raise InvalidParameterError(f"double fork tree needs n >= 6, got {n}")
    spine = n - 4
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges += [(0, spine), (0, spine + 1), (spine - 1, spine + 2), (spine - 1, spine + 3)]
    return Graph(n, edges)


@dataclass(frozen=True)
class BicyclicSpec:
    """Family tag and edge-length parameters naming one bicyclic graph.

    ``B(m, p, q)``: cycles of lengths m and q joined by a path of length p.
    ``C(m, q)``: cycles of lengths m and q sharing one vertex (no p).
    ``P(m, p, q)``: three internally disjoint paths of lengths m, p, q
    between two hub vertices (the theta graph).
    """

    family: str
    m: int
    p: int | None
    q: int

    def __post_init__(self):
        f = self.family
        if f == "B":
            if self.m < 3 or self.q < 3 or self.p is None or self.p < 1:
                raise InvalidParameterError(f"B needs m,q >= 3 and p >= 1: {self}")
        elif f == "C":
            if self.m < 3 or self.q < 3:
                raise InvalidParameterError(f"C needs m,q >= 3: {self}")
            if self.p is not None:
                raise InvalidParameterError("C takes no path parameter")
        elif f == "P":
            if self.p is None or min(self.m, self.p, self.q) < 1:
                raise InvalidParameterError(f"P needs m,p,q >= 1: {self}")
            if [self.m, self.p, self.q].count(1) > 1:
                raise InvalidParameterError(f"P allows at most one unit length: {self}")
        else:
            raise InvalidParameterError(f"unknown family {f!r}")

    @property
    def order(self) -> int:
        if self.family == "C":
            return self.m + self.q - 1
        return self.m + self.p + self.q - 1

    def __str__(self) -> str:
        if self.family == "C":
            return f"C({self.m},{self.q})"
        return f"{self.family}({self.m},{self.p},{self.q})"


def spec_B(m: int, p: int, q: int) -> BicyclicSpec:
    return BicyclicSpec("B", m, p, q)


def spec_C(m: int, q: int) -> BicyclicSpec:
    return BicyclicSpec("C", m, None, q)


def spec_P(m: int, p: int, q: int) -> BicyclicSpec:
    return BicyclicSpec("P", m, p, q)


@dataclass(frozen=True)
class VertexLabeling:
    """Where each structural role of a bicyclic family graph landed.

    ``hub_a``/``hub_b`` are the junction vertices (equal for the C family).
    ``seg_m``/``seg_q`` hold the non-hub vertices of the two length-m/q
    parts in walk order starting next to ``hub_a``/``hub_b``; ``seg_p`` holds
    the interior path vertices in order from ``hub_a`` to ``hub_b``.
    """

    hub_a: int
    hub_b: int
    seg_m: tuple[int, ...]
    seg_p: tuple[int, ...]
    seg_q: tuple[int, ...]

    def all_vertices(self) -> tuple[int, ...]:
        hubs = (self.hub_a,) if self.hub_a == self.hub_b else (self.hub_a, self.hub_b)
        return hubs + self.seg_m + self.seg_p + self.seg_q


def build_bicyclic(spec: BicyclicSpec) -> tuple[Graph, VertexLabeling]:
    """Construct the named family graph with the documented fixed indexing.

    The length-m part takes vertices ``0..m-1`` (hub_a = 0), the interior
    path ``m..m+p-2``, and the length-q part follows with hub_b first.
    """
    m, p, q = spec.m, spec.p, spec.q
    if spec.family == "B":
        hub_a, hub_b = 0, m + p - 1
        edges = [(i, (i + 1) % m) for i in range(m)]
        chain = [hub_a] + list(range(m, m + p - 1)) + [hub_b]
        edges += list(zip(chain, chain[1:]))
        cyc_q = [hub_b] + list(range(m + p, m + p + q - 1))
        edges += [(cyc_q[i], cyc_q[(i + 1) % q]) for i in range(q)]
        lab = VertexLabeling(
            hub_a, hub_b, tuple(range(1, m)), tuple(range(m, m + p - 1)),
            tuple(range(m + p, m + p + q - 1)),
        )
        return Graph(spec.order, edges), lab
    if spec.family == "C":
        hub = 0
        edges = [(i, (i + 1) % m) for i in range(m)]
        cyc_q = [hub] + list(range(m, m + q - 1))
        edges += [(cyc_q[i], cyc_q[(i + 1) % q]) for i in range(q)]
        lab = VertexLabeling(
            hub, hub, tuple(range(1, m)), (), tuple(range(m, m + q - 1))
        )
        return Graph(spec.order, edges), lab
    # theta graph: three hub-to-hub paths of lengths m, p, q
    hub_a, hub_b = 0, m + p - 1
    arm_m = [hub_a] + list(range(1, m)) + [hub_b]
    arm_p = [hub_a] + list(range(m, m + p - 1)) + [hub_b]
    arm_q = [hub_a] + list(range(m + p, m + p + q - 1)) + [hub_b]
    edges = (
        list(zip(arm_m, arm_m[1:]))
        + list(zip(arm_p, arm_p[1:]))
        + list(zip(arm_q, arm_q[1:]))
    )
    lab = VertexLabeling(
        hub_a, hub_b, tuple(range(1, m)), tuple(range(m, m + p - 1)),
        tuple(range(m + p, m + p + q - 1)),
    )
    return Graph(spec.order, edges), lab


def predicted_independence(spec: BicyclicSpec) -> int:
    """Closed-form independence number of a family graph via parameter parity."""
    n = spec.order
    half_up = (n + 1) // 2
    if spec.family == "P":
        odd = sum(x % 2 for x in (spec.m, spec.p, spec.q))
        return half_up - 1 if odd == 2 else half_up
    if spec.family == "C":
        return half_up - 1 if spec.m % 2 == 1 and spec.q % 2 == 1 else half_up
    odd = sum(x % 2 for x in (spec.m, spec.p, spec.q))
    return half_up - 1 if odd >= 2 else half_up
