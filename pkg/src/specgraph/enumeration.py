"""Exhaustive enumeration of non-isomorphic graphs and cospectral-mate
search.

The engine is canonical augmentation: grow graphs one edge at a time from
the empty graph; a child is accepted only when removing its canonical last
edge (the final set bit of the canonical adjacency string) reproduces the
parent's isomorphism class. Each class with the target edge count is then
visited exactly once, with no global seen-set, so disjoint subtrees can
run in parallel worker processes and simply concatenate results.

Subtree pruning is restricted to facts that survive adding edges: a final
connected graph needs at least (components - 1) more edges, a min-degree
target needs ceil(deficiency / 2) more, and triangle counts never
decrease. All prunes are therefore sound for the final (n, m) level.

brute_force_class_counts is the independent dedup oracle for n <= 7: it
walks every labeled edge subset and, on each first-seen subset, marks the
subset's entire permutation orbit, so isomorphism classes are counted with
no reliance on canonical forms.
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, isqrt
from multiprocessing import get_context

from .canon import canonical_labeling
from .charpoly import char_poly
from .graph6 import from_graph6, to_graph6
from .graphs import (
    Graph,
    build_graph,
    connected_components,
    is_connected,
    relabel,
    triangle_count,
    with_edge,
    without_edge,
)

DEFAULT_MAX_VERTICES = 11


class EnumerationError(ValueError):
    """Infeasible or invalid enumeration request."""


@dataclass(frozen=True)
class EnumerationTask:
    """Constraints for one enumeration run."""

    n_vertices: int
    n_edges: int
    connected_only: bool = False
    min_degree_filter: int | None = None


@dataclass
class MateReport:
    """Result of a cospectral-mate search."""

    target: Graph
    mates: list[Graph]
    search_space_size: int
    elapsed_ms: float
    connected_only: bool
    assumed_min_degree: int | None = None

    def to_json_dict(self, with_timing: bool = True) -> dict:
        out = {
            "schema": 1,
            "target_graph6": to_graph6(self.target).decode("ascii"),
            "mates_graph6": [to_graph6(g).decode("ascii") for g in self.mates],
            "search_space_size": self.search_space_size,
            "connected_only": self.connected_only,
            "assumed_min_degree": self.assumed_min_degree,
        }
        if with_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _validate(task: EnumerationTask, max_vertices: int | None) -> None:
    cap = DEFAULT_MAX_VERTICES if max_vertices is None else max_vertices
    if task.n_vertices < 1:
        raise EnumerationError("enumeration needs at least 1 vertex")
    if task.n_vertices > cap:
        raise EnumerationError(
            f"{task.n_vertices}-vertex enumeration exceeds the cap of {cap}; "
            f"raise max_vertices explicitly if you really want this "
            f"(search spaces grow combinatorially)"
        )
    if not 0 <= task.n_edges <= comb(task.n_vertices, 2):
        raise EnumerationError(
            f"edge count {task.n_edges} out of range for {task.n_vertices} vertices"
        )
    if task.min_degree_filter is not None and not 0 <= task.min_degree_filter < task.n_vertices:
        raise EnumerationError(f"min degree {task.min_degree_filter} out of range")


def _pair_from_index(idx: int) -> tuple[int, int]:
    # column-major pair order: (0,1),(0,2),(1,2),(0,3),... index j(j-1)/2 + i
    j = (1 + isqrt(1 + 8 * idx)) // 2
    if j * (j - 1) // 2 > idx:
        j -= 1
    return idx - j * (j - 1) // 2, j


def _canonical_rep(g: Graph) -> tuple[int, Graph]:
    key, p2v = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(p2v):
        perm[v] = pos
    return key, relabel(g, perm)


def _prune(g: Graph, task: EnumerationTask, remaining: int, max_triangles: int | None) -> bool:
    if task.connected_only and len(connected_components(g)) - 1 > remaining:
        return True
    if task.min_degree_filter is not None:
        d = task.min_degree_filter
        deficiency = sum(max(0, d - r.bit_count()) for r in g.rows)
        if deficiency > 2 * remaining:
            return True
    if max_triangles is not None and triangle_count(g) > max_triangles:
        return True
    return False


def _passes(g: Graph, task: EnumerationTask) -> bool:
    if task.connected_only and not is_connected(g):
        return False
    if task.min_degree_filter is not None:
        if min(r.bit_count() for r in g.rows) != task.min_degree_filter:
            return False
    return True


def _children(g: Graph, gkey: int, task: EnumerationTask, max_triangles: int | None):
    """Accepted canonical-augmentation children of a canonical representative."""
    n = g.n
    m = g.m
    T = n * (n - 1) // 2
    remaining = task.n_edges - (m + 1)
    seen: set[int] = set()
    out = []
    for v in range(1, n):
        for u in range(v):
            if (g.rows[u] >> v) & 1:
                continue
            h = with_edge(g, u, v)
            if _prune(h, task, remaining, max_triangles):
                continue
            hkey, p2v = canonical_labeling(h)
            if hkey in seen:
                continue
            seen.add(hkey)
            perm = [0] * n
            for pos, w in enumerate(p2v):
                perm[w] = pos
            hc = relabel(h, perm)
            # canonical last edge: least significant set bit of the key
            low = hkey & -hkey
            i, j = _pair_from_index(T - low.bit_length())
            parent_key, _ = canonical_labeling(without_edge(hc, i, j))
            if parent_key == gkey:
                out.append((hkey, hc))
    return out


def _expand(g: Graph, gkey: int, task: EnumerationTask, max_triangles, sink) -> int:
    """DFS a subtree; sink(graph) on every final-level class that passes.
    Returns the number of visited classes."""
    if g.m == task.n_edges:
        if _passes(g, task):
            sink(g)
            return 1
        return 0
    count = 0
    for hkey, hc in _children(g, gkey, task, max_triangles):
        count += _expand(hc, hkey, task, max_triangles, sink)
    return count


def _empty_root(n: int) -> tuple[int, Graph]:
    g = Graph(n, tuple([0] * n))
    return 0, g


def _split_roots(task: EnumerationTask, max_triangles, want: int):
    """Expand the augmentation tree breadth-first until at least `want`
    subtree roots exist (or the final level is reached). Returns
    (depth_reached, roots)."""
    key, g = _empty_root(task.n_vertices)
    roots = [(key, g)]
    depth = 0
    while depth < task.n_edges and len(roots) < want:
        nxt = []
        for k, r in roots:
            nxt.extend(_children(r, k, task, max_triangles))
        roots = nxt
        depth += 1
        if not roots:
            break
    return depth, roots


def _mate_filter_args(target: Graph):
    p = char_poly(target)
    return tuple(p.coeffs), triangle_count(target)


def _worker(args):
    """Enumerate one subtree; optionally filter by exact cospectrality.

    args: (root_g6, task tuple, max_triangles, target_coeffs or None)
    Returns (visited_count, [graph6 of matches]).
    """
    root_g6, task_tuple, max_triangles, target_coeffs = args
    task = EnumerationTask(*task_tuple)
    root = from_graph6(root_g6)
    key, rep = _canonical_rep(root)
    hits: list[bytes] = []
    if target_coeffs is None:
        sink = lambda g: hits.append(to_graph6(g))
        count = _expand(rep, key, task, max_triangles, sink)
    else:
        tri = -target_coeffs[len(target_coeffs) - 4] // 2 if len(target_coeffs) >= 4 else 0

        def sink(g):
            if triangle_count(g) == tri and char_poly(g).coeffs == target_coeffs:
                hits.append(to_graph6(g))

        count = _expand(rep, key, task, max_triangles, sink)
    return count, hits


def enumerate_graphs(
    task: EnumerationTask,
    visit,
    jobs: int = 1,
    max_vertices: int | None = None,
    _max_triangles: int | None = None,
    _target_coeffs: tuple[int, ...] | None = None,
) -> int:
    """Visit one representative per isomorphism class matching the task.

    Serial runs stream representatives in DFS order; parallel runs
    (jobs > 1) split the augmentation tree into independent subtrees and
    deliver results sorted by graph6 key, so the visited multiset is
    identical in both modes. Returns the number of classes visited (when a
    cospectrality filter is installed, visit only sees the survivors but
    the count still covers every class examined).
    """
    _validate(task, max_vertices)
    if jobs <= 1:
        key, g = _empty_root(task.n_vertices)
        if _target_coeffs is None:
            return _expand(g, key, task, _max_triangles, visit)
        tri = -_target_coeffs[len(_target_coeffs) - 4] // 2 if len(_target_coeffs) >= 4 else 0
        stats = [0]

        def sink(h):
            if triangle_count(h) == tri and char_poly(h).coeffs == _target_coeffs:
                visit(h)

        return _expand(g, key, task, _max_triangles, sink)
    depth, roots = _split_roots(task, _max_triangles, want=4 * jobs)
    if depth == task.n_edges:
        count = 0
        hits = []
        for key, rep in roots:
            if _passes(rep, task):
                count += 1
                hits.append(to_graph6(rep))
        for g6 in sorted(hits):
            visit(from_graph6(g6))
        return count
    task_tuple = (task.n_vertices, task.n_edges, task.connected_only, task.min_degree_filter)
    payloads = [
        (to_graph6(rep), task_tuple, _max_triangles, _target_coeffs) for _, rep in roots
    ]
    total = 0
    all_hits: list[bytes] = []
    with get_context("fork").Pool(jobs) as pool:
        for count, hits in pool.imap_unordered(_worker, payloads):
            total += count
            all_hits.extend(hits)
    for g6 in sorted(all_hits):
        visit(from_graph6(g6))
    return total


def find_cospectral_mates(
    target: Graph,
    connected_only: bool = False,
    jobs: int = 1,
    max_vertices: int | None = None,
    assume_min_degree: int | None = None,
) -> MateReport:
    """Enumerate every class with the target's vertex and edge counts (the
    only candidates, since both are spectral invariants), keep the exactly
    cospectral ones, and drop the target's own class.

    assume_min_degree restricts the search to graphs with that exact
    minimum degree. That is an assumption, not a spectral fact; reports
    carry it so a constrained run can never masquerade as a full one.
    """
    t0 = time.monotonic()
    task = EnumerationTask(
        n_vertices=target.n,
        n_edges=target.m,
        connected_only=connected_only,
        min_degree_filter=assume_min_degree,
    )
    coeffs, tri = _mate_filter_args(target)
    matches: list[Graph] = []
    count = enumerate_graphs(
        task,
        matches.append,
        jobs=jobs,
        max_vertices=max_vertices,
        _max_triangles=tri,
        _target_coeffs=coeffs,
    )
    target_key = canonical_labeling(target)[0]
    mates = [g for g in matches if canonical_labeling(g)[0] != target_key]
    mates.sort(key=to_graph6)
    return MateReport(
        target=target,
        mates=mates,
        search_space_size=count,
        elapsed_ms=(time.monotonic() - t0) * 1000.0,
        connected_only=connected_only,
        assumed_min_degree=assume_min_degree,
    )


def verify_ds(
    n: int,
    connected_only: bool = False,
    jobs: int = 1,
    max_vertices: int | None = None,
    assume_min_degree: int | None = None,
) -> MateReport:
    """Search the full (2n+1 vertices, 3n edges) space for cospectral mates
    of the n-triangle friendship graph. An empty mate list confirms the
    graph is determined by its spectrum at that size."""
    from .friendship import build_friendship

    return find_cospectral_mates(
        build_friendship(n),
        connected_only=connected_only,
        jobs=jobs,
        max_vertices=max_vertices,
        assume_min_degree=assume_min_degree,
    )


def brute_force_class_counts(n: int, connected_only: bool = False) -> Counter:
    """Isomorphism class counts by edge count via labeled edge subsets.

    Every subset of vertex pairs is visited; the first subset of each
    orbit under all n! vertex permutations is counted and its whole orbit
    marked. Independent of canonical labeling by construction. n <= 7.
    """
    if not 1 <= n <= 7:
        raise EnumerationError("brute-force oracle supports 1 <= n <= 7")
    pairs = [(u, v) for v in range(n) for u in range(v)]
    P = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        tbl = [0] * P
        for i, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            tbl[i] = index[(pu, pv) if pu < pv else (pv, pu)]
        tables.append(tbl)
    seen = bytearray(1 << P)
    counts: Counter = Counter()
    for s in range(1 << P):
        if seen[s]:
            continue
        if connected_only:
            edges = [pairs[i] for i in range(P) if (s >> i) & 1]
            if not is_connected(build_graph(n, edges)):
                # still mark the orbit so the scan skips it later
                _mark_orbit(s, tables, seen)
                continue
        counts[s.bit_count()] += 1
        _mark_orbit(s, tables, seen)
    return counts


def _mark_orbit(s: int, tables, seen: bytearray) -> None:
    for tbl in tables:
        t = 0
        ss = s
        while ss:
            b = ss & -ss
            t |= 1 << tbl[b.bit_length() - 1]
            ss ^= b
        seen[t] = 1
