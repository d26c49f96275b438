"""Steps of the connected-cospectral-implies-friendship argument, run
mechanically on a concrete graph, plus desk-scale verification of the two
structural facts the argument leans on.

The chain for a candidate graph G against the n-triangle friendship graph:
exact cospectrality and connectivity (the hypotheses), vertex/edge counts,
spectral radius, minimum degree 2, attainment of the minimum-degree radius
bound, the degree dichotomy {2, 2n} it forces, uniqueness of the hub,
existence of an adjacent degree-2 pair, and finally the structural
conclusion. Each step records PASS/FAIL with evidence; a failure marks the
dependent remainder SKIP. The two imported facts (minimum-degree count,
adjacent-degree-2 rigidity) are checked empirically over enumerated
scopes, and the verdicts say so; nothing here is a formal proof.
"""

from dataclasses import dataclass

from .canon import is_isomorphic
from .charpoly import are_cospectral
from .eigen import (
    BIDEGREED,
    REGULAR,
    EqualityStructureViolation,
    hong_equality_case,
    spectral_radius,
)
from .enumeration import EnumerationTask, enumerate_graphs
from .friendship import build_friendship, closed_form_radius, is_friendship
from .graphs import Graph, connected_components, is_connected

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

RADIUS_TOL = 1e-7

STEP_NAMES = (
    "cospectral",
    "connected",
    "counts",
    "radius",
    "min_degree",
    "hong_equality",
    "degree_dichotomy",
    "unique_hub",
    "adjacent_pair",
    "conclusion",
)


@dataclass(frozen=True)
class ProofStep:
    name: str
    verdict: str  # PASS | FAIL | SKIP
    evidence: str


@dataclass(frozen=True)
class ProofReport:
    n: int
    steps: tuple[ProofStep, ...]
    final_verdict: bool

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "steps": [
                {"step": s.name, "verdict": s.verdict, "evidence": s.evidence}
                for s in self.steps
            ],
            "final_verdict": self.final_verdict,
        }


def _min_degree_count_ok(n: int, deg2_count: int) -> bool:
    """Integer form of: count >= 1 + radius of the n-triangle friendship
    graph. Since the count is an integer this equals count >= ceil(1+rho),
    and squaring avoids floats: count - 1 >= (1 + sqrt(1+8n))/2 iff
    (2*count - 3)^2 >= 1 + 8n (both sides nonnegative)."""
    if 2 * deg2_count - 3 < 0:
        return False
    return (2 * deg2_count - 3) ** 2 >= 1 + 8 * n


def run_proof_pipeline(n: int, g: Graph) -> ProofReport:
    """Run the ten-step argument on g against the n-triangle friendship
    graph. Steps 1-2 (the hypotheses) always run; later steps are skipped
    after the first failure."""
    fn = build_friendship(n)
    steps: list[ProofStep] = []
    failed = False

    def push(name: str, ok: bool, evidence: str):
        nonlocal failed
        steps.append(ProofStep(name, PASS if ok else FAIL, evidence))
        failed = failed or not ok

    # 1. exact cospectrality
    cos = are_cospectral(g, fn)
    push("cospectral", cos, f"char polys {'equal' if cos else 'differ'} "
         f"(graph: {g.n} vertices / {g.m} edges, target: {fn.n} / {fn.m})")

    # 2. connectivity
    ncomp = len(connected_components(g))
    push("connected", ncomp == 1, f"component count {ncomp}")

    def skip_rest(from_name: str):
        idx = STEP_NAMES.index(from_name)
        for name in STEP_NAMES[idx:]:
            steps.append(ProofStep(name, SKIP, "earlier step failed"))

    if failed:
        skip_rest("counts")
        return _finish(n, steps)

    # 3. counts
    ok = g.n == 2 * n + 1 and g.m == 3 * n
    push("counts", ok, f"vertices {g.n} (want {2 * n + 1}), edges {g.m} (want {3 * n})")
    if failed:
        skip_rest("radius")
        return _finish(n, steps)

    # 4. spectral radius matches the closed form
    rho = spectral_radius(g)
    want = closed_form_radius(n)
    ok = abs(rho - want) <= RADIUS_TOL
    push("radius", ok, f"radius {rho:.12g}, closed form {want:.12g}")
    if failed:
        skip_rest("min_degree")
        return _finish(n, steps)

    # 5. minimum degree 2
    degs = g.degrees()
    delta = min(degs)
    deg2 = degs.count(2)
    ok = delta == 2 and _min_degree_count_ok(n, deg2)
    push("min_degree", ok,
         f"delta {delta}, degree-2 count {deg2} (need count >= 1 + radius)")
    if failed:
        skip_rest("hong_equality")
        return _finish(n, steps)

    # 6. the radius bound is attained: regular or bidegreed
    try:
        report = hong_equality_case(g)
        ok = report.classification in (REGULAR, BIDEGREED)
        ev = (f"bound {report.bound:.12g}, radius {report.radius:.12g}, "
              f"classification {report.classification}")
        if report.bidegrees:
            ev += f"{report.bidegrees}"
    except EqualityStructureViolation as exc:
        ok = False
        ev = f"equality attained but structure failed: {exc}"
    push("hong_equality", ok, ev)
    if failed:
        skip_rest("degree_dichotomy")
        return _finish(n, steps)

    # 7. every degree is 2 or 2n
    bad = sorted({d for d in degs if d not in (2, 2 * n)})
    push("degree_dichotomy", not bad,
         f"degrees outside {{2, {2 * n}}}: {bad if bad else 'none'}")
    if failed:
        skip_rest("unique_hub")
        return _finish(n, steps)

    # 8. exactly one vertex of degree 2n, counted two ways. At n = 1 the
    # hub degree 2n equals 2, nothing is distinguished, and the triangle
    # is already forced by the counts; the argument treats n = 1 directly.
    if n == 1:
        ok = g.n == 3 and g.m == 3
        push("unique_hub", ok,
             "n=1: hub degree 2n coincides with 2; triangle forced by counts")
    else:
        hubs = degs.count(2 * n)
        hubs_from_sum = 2 * g.m - 2 * degs.count(2)
        ok = hubs == 1 and hubs_from_sum == 2 * n
        push("unique_hub", ok,
             f"degree-{2 * n} count {hubs}; degree-sum residue {hubs_from_sum} "
             f"(want {2 * n})")
    if failed:
        skip_rest("adjacent_pair")
        return _finish(n, steps)

    # 9. two adjacent degree-2 vertices exist
    pair = None
    for u, v in g.edges():
        if degs[u] == 2 and degs[v] == 2:
            pair = (u, v)
            break
    push("adjacent_pair", pair is not None,
         f"adjacent degree-2 pair: {pair if pair else 'none'}")
    if failed:
        skip_rest("conclusion")
        return _finish(n, steps)

    # 10. the structural conclusion
    ok = is_friendship(g) and is_isomorphic(g, fn)
    push("conclusion", ok, f"is_friendship {is_friendship(g)}, isomorphic {ok}")
    return _finish(n, steps)


def _finish(n: int, steps: list[ProofStep]) -> ProofReport:
    final = all(s.verdict == PASS for s in steps if s.verdict != SKIP) and \
        steps[-1].verdict == PASS
    return ProofReport(n=n, steps=tuple(steps), final_verdict=final)


@dataclass(frozen=True)
class ScopeVerdict:
    """Outcome of an empirical check over an enumerated scope."""

    verdict: str  # PASS | FAIL | SKIP
    tested: int
    evidence: str

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "verdict": self.verdict,
            "tested": self.tested,
            "evidence": self.evidence,
        }


def check_min_degree_property(n: int, g: Graph) -> ScopeVerdict:
    """For a connected graph cospectral with the n-triangle friendship
    graph: minimum degree is 2 and at least 1 + spectral-radius vertices
    attain it. Skips when the hypotheses fail."""
    fn = build_friendship(n)
    if not is_connected(g) or not are_cospectral(g, fn):
        return ScopeVerdict(SKIP, 0, "hypotheses (connected + cospectral) not met")
    degs = g.degrees()
    delta = min(degs)
    deg2 = degs.count(2)
    ok = delta == 2 and _min_degree_count_ok(n, deg2)
    return ScopeVerdict(
        PASS if ok else FAIL,
        1,
        f"delta {delta}, degree-2 count {deg2}, threshold 1 + {closed_form_radius(n):.6g} "
        f"(empirical on this graph only)",
    )


def check_adjacent_deg2_implies_friendship(
    n: int,
    scope: EnumerationTask | None = None,
    jobs: int = 1,
    max_vertices: int | None = None,
    extra_graphs: tuple[Graph, ...] = (),
) -> ScopeVerdict:
    """Empirically verify over an enumerated scope: every graph cospectral
    with the n-triangle friendship graph that has two adjacent degree-2
    vertices is that friendship graph. Reports how many candidates were
    actually tested; extra_graphs lets callers inject known specimens."""
    fn = build_friendship(n)
    if scope is None:
        scope = EnumerationTask(n_vertices=2 * n + 1, n_edges=3 * n)
    candidates: list[Graph] = []
    visited = enumerate_graphs(scope, candidates.append, jobs=jobs, max_vertices=max_vertices)
    cospectral = 0
    with_pair = 0
    tested = 0
    failures = []
    for g in list(candidates) + list(extra_graphs):
        if not are_cospectral(g, fn):
            continue
        cospectral += 1
        degs = g.degrees()
        pair = any(degs[u] == 2 and degs[v] == 2 for u, v in g.edges())
        if not pair:
            continue
        with_pair += 1
        tested += 1
        if not is_isomorphic(g, fn):
            failures.append(g)
    ev = (f"scope classes {visited}, cospectral {cospectral}, "
          f"with adjacent degree-2 pair {with_pair}, "
          f"isomorphic {tested - len(failures)}/{tested} "
          f"(empirical over this scope only)")
    if failures:
        return ScopeVerdict(FAIL, tested, ev)
    if tested == 0:
        return ScopeVerdict(PASS, 0, ev + "; vacuous: no graph met the hypotheses")
    return ScopeVerdict(PASS, tested, ev)
