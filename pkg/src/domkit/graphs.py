"""Simple undirected graphs on dense integer vertices, with a bitmask set kernel.

Vertices are the integers 0..n-1.  Vertex sets are immutable bitmask wrappers
that always iterate in ascending order, so every enumerator in the package can
emit canonically sorted output.  Graphs are immutable after construction; all
operations here are pure functions and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphParseError(ValueError):
    """Malformed edge-list document.  Carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable subset of {0, ..., universe_size - 1}.

    Backed by an integer bitmask; membership tests are O(1) and iteration is
    always in ascending vertex order.
    """

    __slots__ = ("universe_size", "mask")

    def __init__(self, universe_size: int, members: Iterable[int] = ()):
        if universe_size < 0:
            raise ValueError("universe size must be non-negative")
        mask = 0
        for v in members:
            if not 0 <= v < universe_size:
                raise ValueError(f"vertex {v} outside universe of size {universe_size}")
            mask |= 1 << v
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, universe_size: int, mask: int) -> "VertexSet":
        if mask < 0 or mask >> universe_size:
            raise ValueError("mask has bits outside the universe")
        self = cls.__new__(cls)
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "mask", mask)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe_size and bool(self.mask >> v & 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.universe_size == other.universe_size
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe_size, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.universe_size}, {list(self.members)})"

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.universe_size, self.mask & ~other.mask)


def set_sort_key(s: VertexSet) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering for lists of vertex sets: by size, then lexicographic."""
    return (len(s), s.members)


class Graph:
    """Finite simple undirected graph.  Immutable after construction.

    Edges are stored as sorted pairs (u, v) with u < v; adjacency is kept as
    one bitmask per vertex for fast neighborhood algebra.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def adj_mask(self, v: int) -> int:
        """Bitmask of the open neighborhood of ``v``."""
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        """Bitmask of the closed neighborhood of ``v``."""
        return self._adj[v] | (1 << v)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"


def _int_tokens(line: str, line_no: int, expected: int, what: str) -> list[int]:
    tokens = line.split()
    if len(tokens) != expected:
        raise GraphParseError(f"expected {expected} integers for {what}, got {line!r}", line_no)
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            raise GraphParseError(f"non-integer token {t!r} in {what}", line_no) from None
    return out


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: an optional run of comment lines starting with '#', a header line
    "n m", then exactly m lines "u v" with 0 <= u, v < n and u != v.  Blank
    lines and further comment lines are skipped anywhere.  Malformed lines,
    out-of-range indices, self-loops, and duplicate edges are rejected with
    the offending line number.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    n = m = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            n, m = _int_tokens(line, line_no, 2, "header")
            if n < 0 or m < 0:
                raise GraphParseError("header counts must be non-negative", line_no)
            header = (n, m)
            continue
        if len(edges) == m:
            raise GraphParseError("unexpected content after the declared edge list", line_no)
        u, v = _int_tokens(line, line_no, 2, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u}, {v}) out of range for n={n}", line_no)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_no)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge ({key[0]}, {key[1]})", line_no)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("missing header line \"n m\"")
    if len(edges) != m:
        raise GraphParseError(f"expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(graph: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize a graph to the edge-list format, edges sorted lexicographically."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{graph.n} {len(graph.edges)}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _check_vertex(graph: Graph, v: int) -> None:
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range for n={graph.n}")


def _check_universe(graph: Graph, s: VertexSet) -> None:
    if s.universe_size != graph.n:
        raise ValueError(
            f"vertex set universe {s.universe_size} does not match graph order {graph.n}"
        )


def open_neighborhood(graph: Graph, v: int) -> VertexSet:
    """N(v): the vertices adjacent to v."""
    _check_vertex(graph, v)
    return VertexSet.from_mask(graph.n, graph.adj_mask(v))


def closed_neighborhood(graph: Graph, v: int) -> VertexSet:
    """N[v] = {v} together with the vertices adjacent to v."""
    _check_vertex(graph, v)
    return VertexSet.from_mask(graph.n, graph.closed_mask(v))


def neighborhood_of_set(graph: Graph, s: VertexSet, closed: bool = True) -> VertexSet:
    """Union of the (closed or open) neighborhoods of the members of ``s``."""
    _check_universe(graph, s)
    mask = 0
    for v in iter_bits(s.mask):
        mask |= graph.closed_mask(v) if closed else graph.adj_mask(v)
    return VertexSet.from_mask(graph.n, mask)


def complement(graph: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    edges = [
        (u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if not graph.adjacent(u, v)
    ]
    return Graph(graph.n, edges)


def connected_components(graph: Graph) -> list[VertexSet]:
    """Components as vertex sets, ordered by their minimum vertex."""
    out = []
    unvisited = graph.full_mask
    while unvisited:
        start = (unvisited & -unvisited).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = comp
            for v in iter_bits(frontier):
                grown |= graph.adj_mask(v)
            frontier = grown & ~comp
            comp = grown
        out.append(VertexSet.from_mask(graph.n, comp))
        unvisited &= ~comp
    return out


def isolated_vertices(graph: Graph) -> VertexSet:
    mask = 0
    for v in range(graph.n):
        if graph.adj_mask(v) == 0:
            mask |= 1 << v
    return VertexSet.from_mask(graph.n, mask)


def is_complete(graph: Graph) -> bool:
    return all(graph.degree(v) == graph.n - 1 for v in range(graph.n))


def is_edgeless(graph: Graph) -> bool:
    return not graph.edges


def induced_subgraph(graph: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s`` with vertices relabelled 0..|s|-1 in ascending order.

    Returns the subgraph together with the tuple mapping new labels back to the
    original vertices.
    """
    _check_universe(graph, s)
    verts = s.members
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    return Graph(len(verts), edges), verts


def enumerate_triangles(graph: Graph) -> list[VertexSet]:
    """All 3-cliques, each once, in ascending (u, v, w) order."""
    out = []
    for u in range(graph.n):
        au = graph.adj_mask(u)
        for v in iter_bits(au):
            if v <= u:
                continue
            common = au & graph.adj_mask(v)
            for w in iter_bits(common):
                if w > v:
                    out.append(VertexSet(graph.n, (u, v, w)))
    return out


def induces_c6_complement(graph: Graph, t: VertexSet, t2: VertexSet) -> bool:
    """Test whether the union of two disjoint triples induces the complement
    of a 6-cycle.

    That graph consists of two disjoint triangles joined by a perfect
    matching, and its triangle pair is unique, so the test looks for exactly
    two vertex-disjoint triangles covering the union with a matching between
    them.  When ``t`` and ``t2`` are themselves triangles this says precisely
    that the matching runs between them.
    """
    _check_universe(graph, t)
    _check_universe(graph, t2)
    if len(t) != 3 or len(t2) != 3:
        raise ValueError("both vertex sets must have exactly 3 members")
    if t.mask & t2.mask:
        raise ValueError("vertex sets must be disjoint")
    sub, _ = induced_subgraph(graph, t.union(t2))
    triangles = enumerate_triangles(sub)
    if len(triangles) != 2:
        return False
    a, b = triangles
    if a.mask & b.mask or a.mask | b.mask != sub.full_mask:
        return False
    for v in iter_bits(a.mask):
        if (sub.adj_mask(v) & b.mask).bit_count() != 1:
            return False
    for v in iter_bits(b.mask):
        if (sub.adj_mask(v) & a.mask).bit_count() != 1:
            return False
    return True
