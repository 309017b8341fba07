"""Edge-colored multigraphs and the connectivity primitives built on them.

Vertices are integers 1..n.  Edges are identified by their position in the
graph's edge sequence (0-based), so parallel edges are distinguishable.  A
"wild set" is simply a collection of edge ids; an edge colored wild counts
toward the connectivity of every color class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class DisconnectedError(GraphError):
    """The underlying multigraph is not connected."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class BadVertexError(GraphError):
    """A vertex id falls outside 1..n."""


class UnknownColorError(GraphError):
    """An edge references a color that is not in the palette."""


class BadColorError(GraphError):
    """A palette index falls outside the palette."""


class BadEdgeError(GraphError):
    """An edge id falls outside the graph's edge sequence."""


class UnionFind:
    """Array-backed disjoint sets over the elements 1..n, union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; return True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class Edge:
    """Undirected edge between vertices u and v, colored by a palette index."""

    u: int
    v: int
    color: int


@dataclass(frozen=True)
class EdgeColoredGraph:
    """A connected multigraph together with an edge coloring.

    The palette is an ordered sequence of color labels; edge colors are
    indices into it.  The palette may contain labels that no edge uses
    (the coloring need not be surjective).  Instances are immutable and
    safe to share; all operations in this package are pure functions.
    """

    n: int
    palette: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_colors(self) -> int:
        return len(self.palette)

    def color_index(self, label: str) -> int:
        try:
            return self.palette.index(label)
        except ValueError:
            raise UnknownColorError(f"color {label!r} is not in the palette") from None

    def edges_of_color(self, i: int) -> list[int]:
        """Edge ids carrying palette color i."""
        _check_color(self, i)
        return [eid for eid, e in enumerate(self.edges) if e.color == i]

    def used_colors(self) -> set[int]:
        return {e.color for e in self.edges}

    def is_surjective(self) -> bool:
        """True if every palette color appears on at least one edge."""
        return len(self.used_colors()) == self.num_colors


@dataclass(frozen=True)
class QuotientGraph:
    """The graph obtained by contracting a wild set.

    ``class_of[v]`` maps an original vertex to its quotient vertex (entry 0
    is unused filler).  ``origin[j]`` maps a surviving quotient edge back to
    the original edge id.  Edges whose endpoints collapse together are
    absent from ``graph.edges`` and listed in ``dropped``.
    """

    graph: EdgeColoredGraph
    class_of: tuple[int, ...]
    origin: tuple[int, ...]
    dropped: tuple[int, ...]


def _check_color(g: EdgeColoredGraph, i: int) -> None:
    if not 0 <= i < g.num_colors:
        raise BadColorError(f"color index {i} out of range for {g.num_colors} colors")


def _check_edge_id(g: EdgeColoredGraph, e: int) -> None:
    if not 0 <= e < g.m:
        raise BadEdgeError(f"edge id {e} out of range for {g.m} edges")


def check_wild_set(g: EdgeColoredGraph, w: Iterable[int]) -> frozenset[int]:
    """Validate a collection of edge ids and return it as a frozen set."""
    ids = frozenset(w)
    for e in ids:
        _check_edge_id(g, e)
    return ids


def build(
    n: int,
    palette: Sequence[str],
    edges: Iterable[tuple[int, int, int | str]],
) -> EdgeColoredGraph:
    """Validate and construct an edge-colored multigraph.

    Each edge triple is (u, v, color) where color is either a palette index
    or a palette label.  Rejects self-loops, out-of-range vertices, unknown
    colors, and graphs whose underlying multigraph is disconnected.
    """
    if n < 1:
        raise BadVertexError(f"vertex count must be >= 1, got {n}")
    pal = tuple(palette)
    if not pal:
        raise UnknownColorError("palette must contain at least one color")
    if len(set(pal)) != len(pal):
        raise UnknownColorError(f"palette labels must be distinct: {pal}")
    lookup = {label: i for i, label in enumerate(pal)}

    out: list[Edge] = []
    for u, v, color in edges:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise BadVertexError(f"edge ({u}, {v}) references a vertex outside 1..{n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if isinstance(color, str):
            if color not in lookup:
                raise UnknownColorError(f"color {color!r} is not in the palette")
            ci = lookup[color]
        else:
            if not 0 <= color < len(pal):
                raise UnknownColorError(f"color index {color} out of range")
            ci = color
        out.append(Edge(u, v, ci))

    uf = UnionFind(n)
    for e in out:
        uf.union(e.u, e.v)
    if uf.count != 1:
        raise DisconnectedError(f"graph is disconnected ({uf.count} components)")
    return EdgeColoredGraph(n=n, palette=pal, edges=tuple(out))


def _color_uf(g: EdgeColoredGraph, i: int, w: Iterable[int]) -> UnionFind:
    uf = UnionFind(g.n)
    for e in g.edges:
        if e.color == i:
            uf.union(e.u, e.v)
    for eid in w:
        e = g.edges[eid]
        uf.union(e.u, e.v)
    return uf


def mono_components(
    g: EdgeColoredGraph, i: int, w: Iterable[int] = ()
) -> list[frozenset[int]]:
    """Partition of the vertices into components of color i plus the wild set.

    With an empty wild set this is the component structure of the
    monochromatic subgraph for color i.  Parts are ordered by smallest
    member.
    """
    _check_color(g, i)
    ids = check_wild_set(g, w)
    uf = _color_uf(g, i, ids)
    parts: dict[int, set[int]] = {}
    for v in range(1, g.n + 1):
        parts.setdefault(uf.find(v), set()).add(v)
    return [frozenset(p) for p in sorted(parts.values(), key=min)]


def kappa(g: EdgeColoredGraph, i: int, w: Iterable[int] = ()) -> int:
    """Number of components of color i's subgraph augmented by the wild set."""
    _check_color(g, i)
    ids = check_wild_set(g, w)
    return _color_uf(g, i, ids).count


def kappa_sum(g: EdgeColoredGraph) -> int:
    """Total component count across all monochromatic subgraphs."""
    return sum(_color_uf(g, i, ()).count for i in range(g.num_colors))


def color_labels(g: EdgeColoredGraph, w: Iterable[int] = ()) -> list[list[int]]:
    """Per-color component labels: entry [i][v] is a component representative.

    Two vertices share a label for color i exactly when they lie in the same
    component of the color-i subgraph augmented by the wild set.
    """
    ids = check_wild_set(g, w)
    out = []
    for i in range(g.num_colors):
        uf = _color_uf(g, i, ids)
        out.append([uf.find(v) for v in range(g.n + 1)])
    return out


def is_color_connected(g: EdgeColoredGraph, w: Iterable[int]) -> bool:
    """True if adding the wild set makes every color's subgraph connected.

    Palette colors with no edges of their own must be spanned by the wild
    set alone.
    """
    ids = check_wild_set(g, w)
    return all(_color_uf(g, i, ids).count == 1 for i in range(g.num_colors))


def helps(g: EdgeColoredGraph, e: int, i: int) -> bool:
    """True if coloring edge e wild would merge two components of color i."""
    _check_edge_id(g, e)
    _check_color(g, i)
    uf = _color_uf(g, i, ())
    edge = g.edges[e]
    return uf.find(edge.u) != uf.find(edge.v)


def contract(g: EdgeColoredGraph, w: Iterable[int]) -> QuotientGraph:
    """Contract the edges of a wild set, merging vertices joined by wild paths.

    Surviving parallel edges are retained; edges that become self-loops are
    dropped from the quotient's edge sequence and recorded.  Quotient
    vertices are numbered by the smallest original vertex they contain.
    """
    ids = check_wild_set(g, w)
    uf = UnionFind(g.n)
    for eid in ids:
        e = g.edges[eid]
        uf.union(e.u, e.v)

    least: dict[int, int] = {}
    for v in range(1, g.n + 1):
        r = uf.find(v)
        if r not in least or v < least[r]:
            least[r] = v
    number = {r: qid for qid, r in enumerate(sorted(least, key=least.get), start=1)}
    class_of = [0] + [number[uf.find(v)] for v in range(1, g.n + 1)]

    qedges: list[Edge] = []
    origin: list[int] = []
    dropped: list[int] = []
    for eid, e in enumerate(g.edges):
        cu, cv = class_of[e.u], class_of[e.v]
        if cu == cv:
            dropped.append(eid)
        else:
            qedges.append(Edge(cu, cv, e.color))
            origin.append(eid)
    quotient = EdgeColoredGraph(n=len(number), palette=g.palette, edges=tuple(qedges))
    return QuotientGraph(
        graph=quotient,
        class_of=tuple(class_of),
        origin=tuple(origin),
        dropped=tuple(dropped),
    )


def _adjacency(g: EdgeColoredGraph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n + 1)]
    for eid, e in enumerate(g.edges):
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))
    return adj


def bridges(g: EdgeColoredGraph) -> frozenset[int]:
    """Edge ids whose deletion disconnects the underlying multigraph.

    Parallel edges shield each other, so a member of a parallel pair is
    never a bridge.
    """
    adj = _adjacency(g)
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    out: set[int] = set()
    timer = 1
    disc[1] = low[1] = timer
    timer += 1
    stack: list[tuple[int, int, int]] = [(1, -1, 0)]  # vertex, entry edge id, cursor
    while stack:
        v, pe, idx = stack[-1]
        if idx < len(adj[v]):
            stack[-1] = (v, pe, idx + 1)
            w, eid = adj[v][idx]
            if eid == pe:
                continue
            if disc[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, eid, 0))
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > disc[u]:
                    out.add(pe)
    return frozenset(out)


def blocks(g: EdgeColoredGraph) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Biconnected components as (edge id set, vertex set) pairs.

    Every edge belongs to exactly one block; cut vertices appear in several.
    Blocks are ordered by their smallest edge id.  A single-vertex graph has
    no blocks.
    """
    adj = _adjacency(g)
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    estack: list[int] = []
    found: list[list[int]] = []
    timer = 1
    disc[1] = low[1] = timer
    timer += 1
    stack: list[tuple[int, int, int]] = [(1, -1, 0)]
    while stack:
        v, pe, idx = stack[-1]
        if idx < len(adj[v]):
            stack[-1] = (v, pe, idx + 1)
            w, eid = adj[v][idx]
            if eid == pe:
                continue
            if disc[w] == 0:
                estack.append(eid)
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, eid, 0))
            elif disc[w] < disc[v]:
                # back edge, recorded once from the deeper endpoint
                estack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp: list[int] = []
                    while True:
                        top = estack.pop()
                        comp.append(top)
                        if top == pe:
                            break
                    found.append(comp)
    result = []
    for comp in sorted(found, key=min):
        verts: set[int] = set()
        for eid in comp:
            verts.add(g.edges[eid].u)
            verts.add(g.edges[eid].v)
        result.append((frozenset(comp), frozenset(verts)))
    return result
