"""Exact integer characteristic polynomials and cospectrality.

char_poly computes det(xI - A) by the Faddeev-LeVerrier recurrence over
Python's arbitrary-precision integers:

    M_0 = I,  c_n = 1
    for k = 1..n:  c_{n-k} = -trace(A M_{k-1}) / k,  M_k = A M_{k-1} + c_{n-k} I

Every division is exact; a nonzero remainder or a nonzero final
M_n would mean a bug and raises immediately. The matrix products exploit
the 0/1 structure of A: row i of A*M is the sum of M's rows over N(i),
so the cost is O(n * m * n) big-int additions rather than dense O(n^4).

Coefficients are stored lowest degree first: coeffs[k] multiplies x^k,
coeffs[n] == 1. Cospectrality is decided by exact coefficient equality,
never through floating point.
"""

from dataclasses import dataclass
from operator import add

from .graphs import Graph, GraphError


class CharPolyError(ValueError):
    """Invalid characteristic-polynomial operation."""


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial det(xI - A), lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise CharPolyError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        """Horner evaluation (float or int)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly(tuple(poly_mul(self.coeffs, other.coeffs)))

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                t = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                t = f"{mag}x^{k}" if k > 1 else f"{mag}x"
            terms.append(("-" if c < 0 else "+", t))
        if not terms:
            return "0"
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def poly_mul(a, b) -> list[int]:
    """Product of integer coefficient vectors (lowest degree first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def char_poly(g: Graph) -> CharPoly:
    """Exact characteristic polynomial of the adjacency matrix."""
    n = g.n
    if n < 1:
        raise CharPolyError("characteristic polynomial needs at least 1 vertex")
    nbrs = []
    for u in range(n):
        r = g.rows[u]
        lst = []
        while r:
            b = r & -r
            lst.append(b.bit_length() - 1)
            r ^= b
        nbrs.append(lst)
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    zero = [0] * n
    c = [0] * (n + 1)
    c[n] = 1
    for k in range(1, n + 1):
        AM = []
        for i in range(n):
            ns = nbrs[i]
            if not ns:
                AM.append(list(zero))
                continue
            acc = M[ns[0]]
            for t in ns[1:]:
                acc = list(map(add, acc, M[t]))
            if len(ns) == 1:
                acc = list(acc)
            AM.append(acc)
        tr = sum(AM[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r != 0:
            raise AssertionError(f"inexact trace division at step {k}: {-tr} / {k}")
        c[n - k] = q
        if k < n:
            for i in range(n):
                AM[i][i] += q
            M = AM
        else:
            # Cayley-Hamilton: A M_{n-1} + c_0 I must vanish
            for i in range(n):
                AM[i][i] += q
                if any(AM[i]):
                    raise AssertionError("final Faddeev-LeVerrier matrix is nonzero")
    return CharPoly(tuple(c))


def are_cospectral(g: Graph, h: Graph) -> bool:
    """Exact spectral equality: identical characteristic polynomials."""
    if g.n != h.n or g.m != h.m:
        return False
    return char_poly(g).coeffs == char_poly(h).coeffs


def edges_from_charpoly(p: CharPoly) -> int:
    """Edge count encoded in the x^{n-2} coefficient (= -m)."""
    if p.degree < 2:
        raise CharPolyError(f"degree {p.degree} polynomial has no edge coefficient")
    return -p.coeffs[p.degree - 2]


def triangles_from_charpoly(p: CharPoly) -> int:
    """Triangle count encoded in the x^{n-3} coefficient (= -2t)."""
    if p.degree < 3:
        raise CharPolyError(f"degree {p.degree} polynomial has no triangle coefficient")
    c = p.coeffs[p.degree - 3]
    if c % 2:
        raise CharPolyError(f"odd x^{p.degree - 3} coefficient {c}: not an adjacency polynomial")
    return -c // 2
