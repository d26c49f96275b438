"""Canonical forms and isomorphism.

The canonical form of a graph is the lexicographically smallest upper-
triangle adjacency bit-string (column-major pair order, the graph6 body
order) over all vertex labelings reachable from iterated degree/neighborhood
refinement plus backtracking over the surviving candidates. Two graphs are
isomorphic iff their canonical forms are equal.

The search prunes with (a) partial bit-string comparison against the best
leaf found so far and (b) automorphisms discovered whenever a leaf
reproduces the best bit-string, which both collapse sibling branches and
allow backjumping to the deepest ancestor shared with the best leaf.
Without (b), graphs with large automorphism groups (unions of identical
components, friendship graphs) would take exponential time.

Supported size: n <= 512 vertices (enforced). Refinement-asymmetric graphs
are cheap at any size; heavily symmetric inputs stay practical into the
low hundreds of vertices, which covers everything this package enumerates
or compares (33-vertex graphs are well inside the envelope).
"""

import sys

from .graphs import Graph, GraphError, relabel

_MAX_CANON = 512


def _neighbor_lists(g: Graph) -> list[list[int]]:
    out = []
    for u in range(g.n):
        r = g.rows[u]
        lst = []
        while r:
            b = r & -r
            lst.append(b.bit_length() - 1)
            r ^= b
        out.append(lst)
    return out


def _refine(n, nbrs, colors):
    """Equitable refinement. Returns (colors, cell_sizes) with cells ordered
    smallest-first (stable in inherited color order), so singleton cells sit
    at the front and the placed-vertex prefix grows monotonically."""
    while True:
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted(colors[w] for w in nbrs[v]))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            break
        colors = new
    k = (max(colors) + 1) if n else 0
    size = [0] * k
    for c in colors:
        size[c] += 1
    order = sorted(range(k), key=lambda c: (size[c], c))
    remap = [0] * k
    for i, c in enumerate(order):
        remap[c] = i
    return [remap[c] for c in colors], [size[c] for c in order]


def canonical_labeling(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return (key, placement) where key is the canonical bit-string as an
    int with C(n,2) bits (earlier pairs more significant) and placement[i]
    is the vertex assigned position i."""
    n = g.n
    if n > _MAX_CANON:
        raise GraphError(f"canonical form supports at most {_MAX_CANON} vertices, got {n}")
    if n == 0:
        return 0, ()
    rows = g.rows
    T = n * (n - 1) // 2
    nbrs = _neighbor_lists(g)

    best = None
    best_p2v = None
    best_fixed = None
    autos: list[tuple[int, ...]] = []

    def search(colors, fixed):
        # returns a backjump depth < len(fixed), or None
        nonlocal best, best_p2v, best_fixed
        colors, sizes = _refine(n, nbrs, colors)
        ncells = len(sizes)
        cells = [[] for _ in range(ncells)]
        for v in range(n):
            cells[colors[v]].append(v)
        k = 0
        while k < ncells and sizes[k] == 1:
            k += 1
        p2v = [cells[i][0] for i in range(k)]
        if best is not None and k >= 2:
            s = 0
            for j in range(1, k):
                rv = rows[p2v[j]]
                for i in range(j):
                    s = (s << 1) | ((rv >> p2v[i]) & 1)
            if s > (best >> (T - k * (k - 1) // 2)):
                return None
        if k == ncells:
            s = 0
            for j in range(1, n):
                rv = rows[p2v[j]]
                for i in range(j):
                    s = (s << 1) | ((rv >> p2v[i]) & 1)
            if best is None or s < best:
                best = s
                best_p2v = tuple(p2v)
                best_fixed = tuple(fixed)
                return None
            if s == best:
                a = [0] * n
                for i in range(n):
                    a[best_p2v[i]] = p2v[i]
                if any(a[i] != i for i in range(n)):
                    autos.append(tuple(a))
                d = 0
                bf = best_fixed
                while d < len(fixed) and d < len(bf) and bf[d] == fixed[d]:
                    d += 1
                if d < len(fixed):
                    return d
            return None
        tc = cells[k]
        for c in range(k + 1, ncells):
            if 1 < sizes[c] < len(tc):
                tc = cells[c]
        depth = len(fixed)
        done = []
        for v in tc:
            if done:
                rel = [a for a in autos if all(a[f] == f for f in fixed)]
                if rel:
                    orb = set(done)
                    stack = list(done)
                    while stack:
                        x = stack.pop()
                        for a in rel:
                            y = a[x]
                            if y not in orb:
                                orb.add(y)
                                stack.append(y)
                    if v in orb:
                        continue
            nc = [2 * c for c in colors]
            nc[v] -= 1
            fixed.append(v)
            rv = search(nc, fixed)
            fixed.pop()
            done.append(v)
            if rv is not None and rv < depth:
                return rv
        return None

    old_limit = sys.getrecursionlimit()
    if old_limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        search([0] * n, [])
    finally:
        sys.setrecursionlimit(old_limit)
    return best, best_p2v


def canonical_key(g: Graph) -> bytes:
    """Permutation-invariant key: the graph6 encoding of the canonically
    labeled graph. Equal keys iff isomorphic."""
    from .graph6 import to_graph6

    return to_graph6(canonical_graph(g))


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    _, p2v = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(p2v):
        perm[v] = pos
    return relabel(g, perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Edge-preserving bijection test via canonical form equality."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g)[0] == canonical_labeling(h)[0]
