"""Zero-divisor graphs of a lattice and their exact invariants.

Two constructions: the classic graph (adjacency: meet equals bottom)
and the ideal-relative graph (adjacency: meet lands in the ideal).
Vertices are lattice element indices; invariants are all computed
exactly — low-link for cut vertices and bridges, branch-and-bound for
the clique number, backtracking for the chromatic number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .lattice import Lattice
from .ideals import IdealSet, require_ideal


@dataclass(frozen=True)
class GraphOrigin:
    lattice: Lattice
    ideal_members: Optional[frozenset[int]]  # None for the classic graph
    note: str = ""


@dataclass(frozen=True)
class ZdGraph:
    """Simple undirected graph over a subset of lattice elements."""

    vertex_elements: tuple[int, ...]  # sorted element indices
    adjacency: tuple[tuple[bool, ...], ...]  # indexed by local position
    origin: GraphOrigin

    @property
    def n(self) -> int:
        return len(self.vertex_elements)

    def local(self, element: int) -> int:
        return self.vertex_elements.index(element)

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.n) if self.adjacency[i][j]]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (element, element) pairs, deterministic order."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adjacency[i][j]:
                    out.append((self.vertex_elements[i], self.vertex_elements[j]))
        return out

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def labels(self) -> list[str]:
        lab = self.origin.lattice.labels
        return [lab[e] for e in self.vertex_elements]


def _build(L: Lattice, vertices: list[int], adjacent, origin: GraphOrigin) -> ZdGraph:
    vs = tuple(sorted(vertices))
    rows = []
    for a in vs:
        rows.append(tuple(a != b and adjacent(a, b) for b in vs))
    return ZdGraph(vertex_elements=vs, adjacency=tuple(rows), origin=origin)


def build_gamma(L: Lattice) -> ZdGraph:
    """Classic zero-divisor graph: x is a vertex when some nonzero y
    meets it to bottom.  Note the bottom element itself qualifies (it is
    annihilated by every nonzero element), matching the source text even
    though much of the literature excludes it."""
    if L.n < 2:
        raise ValueError("classic zero-divisor graph needs at least 2 elements")
    bot = L.bottom

    def annihilated(x: int) -> bool:
        return any(y != bot and L.meet(x, y) == bot for y in L.elements())

    vertices = [x for x in L.elements() if annihilated(x)]
    return _build(
        L,
        vertices,
        lambda a, b: L.meet(a, b) == bot,
        GraphOrigin(lattice=L, ideal_members=None),
    )


def build_gamma_I(L: Lattice, I: IdealSet) -> ZdGraph:
    """Ideal-relative graph: vertices are elements outside I whose meet
    with some other outside element falls into I."""
    require_ideal(L, I, proper=True)
    outside = [x for x in L.elements() if x not in I.members]

    def qualifies(x: int) -> bool:
        return any(y != x and L.meet(x, y) in I.members for y in outside)

    vertices = [x for x in outside if qualifies(x)]
    return _build(
        L,
        vertices,
        lambda a, b: L.meet(a, b) in I.members,
        GraphOrigin(lattice=L, ideal_members=I.members),
    )


def rebuild_adjacency(G: ZdGraph) -> tuple[tuple[bool, ...], ...]:
    """Recompute the adjacency matrix from the origin record."""
    L = G.origin.lattice
    if G.origin.ideal_members is None:
        inside = lambda m: m == L.bottom
    else:
        inside = lambda m: m in G.origin.ideal_members
    rows = []
    for a in G.vertex_elements:
        rows.append(tuple(a != b and inside(L.meet(a, b)) for b in G.vertex_elements))
    return tuple(rows)


def induced_subgraph(G: ZdGraph, keep: Iterable[int]) -> ZdGraph:
    """Restrict to the given vertex elements."""
    keep_set = set(keep)
    unknown = keep_set - set(G.vertex_elements)
    if unknown:
        raise ValueError(f"unknown vertices in keep set: {sorted(unknown)}")
    vs = tuple(e for e in G.vertex_elements if e in keep_set)
    pos = {e: G.local(e) for e in vs}
    rows = tuple(
        tuple(G.adjacency[pos[a]][pos[b]] for b in vs) for a in vs
    )
    origin = GraphOrigin(
        lattice=G.origin.lattice,
        ideal_members=G.origin.ideal_members,
        note=(G.origin.note + " restricted").strip(),
    )
    return ZdGraph(vertex_elements=vs, adjacency=rows, origin=origin)


@dataclass(frozen=True)
class GraphInvariants:
    """Exact invariants; diameter None means infinite (disconnected),
    girth None means acyclic.  Vertex/edge sets use element indices."""

    connected: bool
    diameter: Optional[int]
    girth: Optional[int]
    cut_vertices: frozenset[int]
    bridges: frozenset[tuple[int, int]]
    core_vertices: frozenset[int]
    core_edges: frozenset[tuple[int, int]]
    clique_number: int
    chromatic_number: int
    degrees: tuple[int, ...]  # aligned with vertex_elements


def _bfs_dist(G: ZdGraph, src: int, skip_edge=None) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * G.n
    dist[src] = 0
    queue = [src]
    while queue:
        nxt = []
        for u in queue:
            for v in range(G.n):
                if not G.adjacency[u][v] or dist[v] is not None:
                    continue
                if skip_edge and {u, v} == skip_edge:
                    continue
                dist[v] = dist[u] + 1
                nxt.append(v)
        queue = nxt
    return dist


def _girth(G: ZdGraph) -> Optional[int]:
    # Shortest cycle through each edge: drop the edge, find the shortest
    # alternative path between its endpoints.  Exact on these tiny graphs.
    best = None
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if not G.adjacency[i][j]:
                continue
            dist = _bfs_dist(G, i, skip_edge={i, j})
            if dist[j] is not None:
                length = dist[j] + 1
                if best is None or length < best:
                    best = length
    return best


def _cut_vertices_and_bridges(G: ZdGraph) -> tuple[set[int], set[tuple[int, int]]]:
    """Iterative low-link DFS over all components."""
    n = G.n
    disc = [None] * n
    low = [0] * n
    cut: set[int] = set()
    bridges: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] is not None:
            continue
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] is None:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(G.neighbors(v))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges.add((min(p, u), max(p, u)))
                    if p != root and low[u] >= disc[p]:
                        cut.add(p)
        if root_children > 1:
            cut.add(root)
    return cut, bridges


def _clique_number(G: ZdGraph) -> int:
    adj = [set(G.neighbors(i)) for i in range(G.n)]
    best = 0

    def expand(candidates: set[int], size: int):
        nonlocal best
        if size > best:
            best = size
        if size + len(candidates) <= best:
            return
        for v in sorted(candidates):
            if size + len(candidates) <= best:
                return
            expand(candidates & adj[v], size + 1)
            candidates = candidates - {v}

    expand(set(range(G.n)), 0)
    return best


def _colorable(G: ZdGraph, k: int) -> bool:
    colors = [-1] * G.n
    order = sorted(range(G.n), key=lambda v: -G.degree(v))

    def assign(idx: int, used: int) -> bool:
        if idx == G.n:
            return True
        v = order[idx]
        limit = min(k, used + 1)  # new colors are interchangeable
        for c in range(limit):
            if any(G.adjacency[v][u] and colors[u] == c for u in range(G.n)):
                continue
            colors[v] = c
            if assign(idx + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return assign(0, 0)


def _chromatic_number(G: ZdGraph, lower: int) -> int:
    if G.n == 0:
        return 0
    for k in range(max(lower, 1), G.n + 1):
        if _colorable(G, k):
            return k
    return G.n


def invariants(G: ZdGraph) -> GraphInvariants:
    """Compute all invariants exactly.

    Empty graph convention: connected True, diameter 0, girth acyclic.
    """
    if G.n == 0:
        return GraphInvariants(
            connected=True, diameter=0, girth=None,
            cut_vertices=frozenset(), bridges=frozenset(),
            core_vertices=frozenset(), core_edges=frozenset(),
            clique_number=0, chromatic_number=0, degrees=(),
        )
    dists = [_bfs_dist(G, i) for i in range(G.n)]
    connected = all(d is not None for d in dists[0])
    diameter = None
    if connected:
        diameter = max(d for row in dists for d in row)
    girth = _girth(G)
    cut, bridges_local = _cut_vertices_and_bridges(G)
    elem = G.vertex_elements
    bridges = frozenset(
        (elem[min(u, v)], elem[max(u, v)]) for u, v in bridges_local
    )
    all_edges = frozenset(G.edges())
    core_edges = all_edges - bridges
    core_vertices = frozenset(e for pair in core_edges for e in pair)
    omega = _clique_number(G)
    chi = _chromatic_number(G, omega)
    return GraphInvariants(
        connected=connected,
        diameter=diameter,
        girth=girth,
        cut_vertices=frozenset(elem[i] for i in cut),
        bridges=bridges,
        core_vertices=core_vertices,
        core_edges=core_edges,
        clique_number=omega,
        chromatic_number=chi,
        degrees=tuple(G.degree(i) for i in range(G.n)),
    )


def graphs_isomorphic(G1: ZdGraph, G2: ZdGraph) -> Optional[dict[int, int]]:
    """Exact graph isomorphism by backtracking with degree pruning.

    Returns a mapping of G1 vertex elements to G2 vertex elements.
    """
    if G1.n != G2.n:
        return None
    deg1 = [G1.degree(i) for i in range(G1.n)]
    deg2 = [G2.degree(i) for i in range(G2.n)]
    if sorted(deg1) != sorted(deg2):
        return None
    n = G1.n
    order = sorted(range(n), key=lambda v: (deg1.count(deg1[v]), v))
    mapping: dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        a = order[k]
        for b in range(n):
            if b in used or deg2[b] != deg1[a]:
                continue
            if all(
                G1.adjacency[a][a2] == G2.adjacency[b][b2]
                for a2, b2 in mapping.items()
            ):
                mapping[a] = b
                used.add(b)
                if extend(k + 1):
                    return True
                del mapping[a]
                used.remove(b)
        return False

    if extend(0):
        return {
            G1.vertex_elements[a]: G2.vertex_elements[b]
            for a, b in mapping.items()
        }
    return None


def _dot_name(label: str) -> str:
    if label.isalnum() or (label and all(c.isalnum() or c == "_" for c in label)):
        return label
    return '"' + label.replace('"', '\\"') + '"'


def to_dot(G: ZdGraph, name: str = "zd") -> str:
    """Deterministic DOT rendering, each edge emitted once."""
    lab = G.origin.lattice.labels
    lines = [f"graph {name} {{"]
    for e in G.vertex_elements:
        lines.append(f"  {_dot_name(lab[e])};")
    for a, b in G.edges():
        lines.append(f"  {_dot_name(lab[a])} -- {_dot_name(lab[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt_vertex_set(L: Lattice, vs: Iterable[int]) -> str:
    return "{" + ",".join(L.labels[v] for v in sorted(vs)) + "}"


def invariants_report(G: ZdGraph, inv: Optional[GraphInvariants] = None) -> str:
    """Flat key-value report with stable key names."""
    if inv is None:
        inv = invariants(G)
    L = G.origin.lattice
    lines = [
        f"vertices: {_fmt_vertex_set(L, G.vertex_elements)}",
        f"edges: {' '.join(f'{L.labels[a]}-{L.labels[b]}' for a, b in G.edges())}",
        f"connected: {'yes' if inv.connected else 'no'}",
        f"diameter: {'INFINITE' if inv.diameter is None else inv.diameter}",
        f"girth: {'ACYCLIC' if inv.girth is None else inv.girth}",
        f"cut_vertices: {_fmt_vertex_set(L, inv.cut_vertices)}",
        f"core_vertices: {_fmt_vertex_set(L, inv.core_vertices)}",
        f"omega: {inv.clique_number}",
        f"chi: {inv.chromatic_number}",
    ]
    if G.n == 0:
        lines.append("note: empty graph; connected/diameter reported by convention")
    return "\n".join(lines) + "\n"
