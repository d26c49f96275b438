"""Simple undirected graphs stored as bit-packed adjacency rows.

Vertices are dense 0-based integers. Row u is a Python int whose bit v is
set iff u ~ v, so neighborhood intersection, BFS frontiers and triangle
counting are word-parallel big-int operations. Graphs are immutable after
construction; all "mutation" goes through builders that return new graphs.
"""

from collections.abc import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: number of vertices.
        rows: tuple of ints; bit v of rows[u] is the edge indicator (u, v).
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {u} has bits beyond vertex range")
            if (r >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u, r in enumerate(rows):
            m = r >> (u + 1)
            v = u + 1
            while m:
                if m & 1 and not (rows[v] >> u) & 1:
                    raise GraphError(f"asymmetric adjacency at ({u}, {v})")
                m >>= 1
                v += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        r = self.rows[u]
        while r:
            b = r & -r
            yield b.bit_length() - 1
            r ^= b

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

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises GraphError for out-of-range endpoints or self-loops.
    """
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph with edge (u, v) added."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def without_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph with edge (u, v) removed."""
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply vertex permutation: vertex v becomes perm[v]."""
    rows = [0] * g.n
    for u in range(g.n):
        r = g.rows[u]
        pu = perm[u]
        acc = 0
        while r:
            b = r & -r
            acc |= 1 << perm[b.bit_length() - 1]
            r ^= b
        rows[pu] = acc
    return Graph(g.n, tuple(rows))


def degree_sequence(g: Graph) -> list[int]:
    """Per-vertex degrees; degrees[v] = |N(v)|."""
    return g.degrees()


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def is_connected(g: Graph) -> bool:
    """BFS reachability from vertex 0. Rejects the 0-vertex graph."""
    if g.n == 0:
        raise GraphError("connectivity of the 0-vertex graph is undefined")
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            b = frontier & -frontier
            nxt |= g.rows[b.bit_length() - 1]
            frontier ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, ordered by minimum."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = unseen & -unseen
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= g.rows[b.bit_length() - 1]
                frontier ^= b
            frontier = nxt & ~seen
            seen |= frontier
        comp = []
        s = seen
        while s:
            b = s & -s
            comp.append(b.bit_length() - 1)
            s ^= b
        comps.append(comp)
        unseen &= ~seen
    return comps


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted above g's."""
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def triangle_count(g: Graph) -> int:
    """Number of triangles, via common-neighbor popcounts over edges."""
    total = 0
    for u in range(g.n):
        r = g.rows[u] >> (u + 1)
        v = u + 1
        while r:
            if r & 1:
                total += (g.rows[u] & g.rows[v]).bit_count()
            r >>= 1
            v += 1
    # each triangle is counted once per edge
    return total // 3


def trace_power(g: Graph, k: int) -> int:
    """Exact trace of A^k for small k (used for spectral cross-checks)."""
    if k == 0:
        return g.n
    if k == 1:
        return 0
    if k == 2:
        return 2 * g.m
    if k == 3:
        return 6 * triangle_count(g)
    if k == 4:
        total = 0
        for u in range(g.n):
            for v in range(g.n):
                total += (g.rows[u] & g.rows[v]).bit_count() ** 2
        # sum of squared common-neighbor counts includes the diagonal
        return total
    raise GraphError(f"trace of A^{k} not supported")


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k}: one center adjacent to k leaves."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) sample from the given random.Random."""
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))
