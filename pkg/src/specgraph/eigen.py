"""Floating-point spectra, spectral radius, and the minimum-degree
spectral-radius bound with its equality-case classification.

Numeric eigenvalues back the bound checks and the proof pipeline; all
cospectrality decisions stay exact (see charpoly). Eigenvalues come from
LAPACK's symmetric solver via numpy, which is accurate to ~1e-13 at these
sizes; the classification tolerance of 1e-7 (relative) sits far above
solver noise and far below the gap to any strict-inequality case met here.
"""

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, GraphError, is_connected, min_degree

CLUSTER_TOL = 1e-6
EQUALITY_RTOL = 1e-7

REGULAR = "REGULAR"
BIDEGREED = "BIDEGREED"
STRICT = "STRICT"


class HongBoundError(ValueError):
    """Inconsistent (n, m, delta) arguments for the degree bound."""


class EqualityStructureViolation(AssertionError):
    """The bound is attained within tolerance but the graph is neither
    regular nor bidegreed with degrees {delta, n-1}. For connected graphs
    this contradicts the equality characterization, so it is reported
    loudly instead of silently classified. Disconnected graphs genuinely
    can land here (e.g. K_6 + C_3); the characterization is a statement
    about connected graphs."""


@dataclass(frozen=True)
class SpectrumSummary:
    """Descending eigenvalues with a clustering tolerance for display."""

    eigenvalues: tuple[float, ...]
    radius: float
    tolerance: float = CLUSTER_TOL

    def clustered(self) -> list[tuple[float, int]]:
        """(value, multiplicity) groups; values closer than the tolerance
        merge. Display only: exact multiplicities come from exact code."""
        out: list[tuple[float, int]] = []
        for ev in self.eigenvalues:
            if out and abs(out[-1][0] - ev) <= self.tolerance:
                v, c = out[-1]
                out[-1] = ((v * c + ev) / (c + 1), c + 1)
            else:
                out.append((ev, 1))
        return out


@dataclass(frozen=True)
class HongReport:
    """Bound vs observed radius with the equality-case classification."""

    n: int
    m: int
    delta: int
    bound: float
    radius: float
    classification: str           # REGULAR | BIDEGREED | STRICT
    bidegrees: tuple[int, int] | None = None  # (delta, n-1) when BIDEGREED


def eigenvalues(g: Graph) -> SpectrumSummary:
    """All adjacency eigenvalues, sorted descending."""
    if g.n < 1:
        raise GraphError("eigenvalues need at least 1 vertex")
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u in range(g.n):
        r = g.rows[u]
        while r:
            b = r & -r
            a[u, b.bit_length() - 1] = 1.0
            r ^= b
    evs = np.linalg.eigvalsh(a)
    evs = tuple(float(x) for x in evs[::-1])
    # solver sanity: power sums of degree 1 and 2 are combinatorial
    tol = max(1, g.n) * CLUSTER_TOL
    if abs(sum(evs)) > tol or abs(sum(x * x for x in evs) - 2 * g.m) > tol:
        raise AssertionError("eigenvalue solver violated trace identities")
    return SpectrumSummary(eigenvalues=evs, radius=evs[0])


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue. For connected graphs the Perron bounds
    (average degree <= radius <= max degree) are asserted."""
    rho = eigenvalues(g).radius
    if g.n >= 1 and is_connected(g):
        degs = g.degrees()
        avg = 2 * g.m / g.n
        if rho < avg - 1e-9 or rho > max(degs) + 1e-9:
            raise AssertionError(
                f"Perron bounds violated: avg {avg} <= rho {rho} <= max {max(degs)}"
            )
    return rho


def hong_bound(n: int, m: int, delta: int) -> float:
    """(delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4)."""
    if n < 1 or m < 0 or not 0 <= delta <= n - 1:
        raise HongBoundError(f"invalid graph parameters n={n}, m={m}, delta={delta}")
    radicand = 2 * m - n * delta + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise HongBoundError(
            f"negative radicand {radicand}: inconsistent n={n}, m={m}, delta={delta}"
        )
    return (delta - 1) / 2 + math.sqrt(radicand)


def hong_equality_case(g: Graph) -> HongReport:
    """Classify g against the bound: REGULAR or BIDEGREED when the bound is
    attained (within 1e-7 relative), STRICT otherwise.

    Attaining the bound forces the degree structure for connected graphs;
    if equality holds numerically but the structure fails,
    EqualityStructureViolation is raised rather than guessing.
    """
    if g.n < 2:
        raise GraphError("equality classification needs at least 2 vertices")
    degs = g.degrees()
    delta = min(degs)
    bound = hong_bound(g.n, g.m, delta)
    radius = eigenvalues(g).radius
    if radius > bound + 1e-9:
        raise AssertionError(f"radius {radius} exceeds bound {bound}")
    if abs(bound - radius) <= EQUALITY_RTOL * max(1.0, bound):
        degset = set(degs)
        if len(degset) == 1:
            return HongReport(g.n, g.m, delta, bound, radius, REGULAR)
        if degset == {delta, g.n - 1}:
            return HongReport(
                g.n, g.m, delta, bound, radius, BIDEGREED, (delta, g.n - 1)
            )
        raise EqualityStructureViolation(
            f"bound attained (bound={bound!r}, radius={radius!r}) but degrees "
            f"{sorted(degset)} are neither regular nor {{{delta}, {g.n - 1}}}; "
            f"connected={is_connected(g)}"
        )
    return HongReport(g.n, g.m, delta, bound, radius, STRICT)
