"""Friendship graphs, their closed-form spectra, and the one cospectral
exception.

The friendship graph with n triangles has 2n+1 vertices: a hub adjacent to
everything plus n disjoint adjacent pairs. Its characteristic polynomial
factors as (x^2 - x - 2n) (x+1)^n (x-1)^(n-1), so the spectral radius is
(1 + sqrt(1+8n))/2.

For n = 16 (and only then) the friendship graph has a cospectral mate:
the disjoint union of ten single edges with a 13-vertex block made of a
complete bipartite 5+5 graph minus a perfect matching, plus a triangle
joined completely to one side. The block's edge list here is transcribed
from a drawing, so its characteristic polynomial is verified against the
known factorization (x^2 - x - 32)(x-1)^5 (x+1)^6 at build time; any
transcription slip fails loudly.
"""

from functools import lru_cache

from .charpoly import CharPoly, poly_mul
from .graphs import Graph, GraphError, build_graph, complete_graph, disjoint_union


def build_friendship(n: int) -> Graph:
    """Hub vertex 0 adjacent to all; vertices (2k-1, 2k) adjacent, k = 1..n."""
    if n < 1:
        raise GraphError(f"friendship graph needs n >= 1, got {n}")
    edges = []
    for k in range(1, n + 1):
        a, b = 2 * k - 1, 2 * k
        edges += [(0, a), (0, b), (a, b)]
    return build_graph(2 * n + 1, edges)


def closed_form_charpoly(n: int) -> CharPoly:
    """Exact expansion of (x^2 - x - 2n) (x+1)^n (x-1)^(n-1)."""
    if n < 1:
        raise GraphError(f"friendship graph needs n >= 1, got {n}")
    p = [-2 * n, -1, 1]
    for _ in range(n):
        p = poly_mul(p, [1, 1])
    for _ in range(n - 1):
        p = poly_mul(p, [-1, 1])
    return CharPoly(tuple(p))


def closed_form_radius(n: int) -> float:
    """(1 + sqrt(1 + 8n)) / 2."""
    if n < 1:
        raise GraphError(f"friendship graph needs n >= 1, got {n}")
    return (1.0 + (1.0 + 8.0 * n) ** 0.5) / 2.0


def is_friendship(g: Graph) -> bool:
    """Structural test: one hub adjacent to all, everything else in adjacent
    degree-2 pairs. Equivalent to (but much faster than) isomorphism against
    a built friendship graph."""
    n = g.n
    if n < 3 or n % 2 == 0:
        return False
    k = (n - 1) // 2
    if g.m != 3 * k:
        return False
    degs = g.degrees()
    if k == 1:
        return sorted(degs) == [2, 2, 2]  # triangle
    hubs = [v for v in range(n) if degs[v] == 2 * k]
    if len(hubs) != 1:
        return False
    hub = hubs[0]
    full = (1 << n) - 1
    if g.rows[hub] != full ^ (1 << hub):
        return False
    for v in range(n):
        if v == hub:
            continue
        if degs[v] != 2:
            return False
        partner = g.rows[v] & ~(1 << hub)
        if partner.bit_count() != 1:
            return False
    return True


@lru_cache(maxsize=1)
def f16_mate_block() -> Graph:
    """The 13-vertex block of the friendship-16 mate.

    Rows 0-4 and 5-9 form a complete bipartite graph minus the perfect
    matching i ~ 5+i; vertices 10-12 form a triangle, each adjacent to all
    of 5-9. 38 edges, degree sequence {4^5, 7^8}.
    """
    edges = []
    for i in range(5):
        for j in range(5):
            if i != j:
                edges.append((i, 5 + j))
    edges += [(10, 11), (10, 12), (11, 12)]
    for b in (10, 11, 12):
        for mid in range(5, 10):
            edges.append((b, mid))
    g = build_graph(13, edges)
    # transcription checksum: the block's polynomial must match the known
    # factorization exactly
    from .charpoly import char_poly

    expected = poly_mul([-32, -1, 1], [-1, 1])
    for _ in range(4):
        expected = poly_mul(expected, [-1, 1])
    for _ in range(6):
        expected = poly_mul(expected, [1, 1])
    if char_poly(g).coeffs != tuple(expected):
        raise AssertionError("mate block transcription does not match its known spectrum")
    return g


@lru_cache(maxsize=1)
def f16_mate() -> Graph:
    """The disconnected cospectral mate of the friendship graph with 16
    triangles: the 13-vertex block plus ten disjoint single edges.
    33 vertices, 48 edges."""
    g = f16_mate_block()
    k2 = complete_graph(2)
    for _ in range(10):
        g = disjoint_union(g, k2)
    return g
