"""Closed-form unmatched-face counts for triple subcomplexes.

For the subcomplex (d,i,j) under its canonical matching, the unmatched
faces sit in the squares (a, n-d-1-a) for a0 <= a <= i-1 where
a0 = max(n-d-k, n-d-1-j).  Every square strictly left of the rightmost one
contributes C(n,a)*C(n-a-1,b-1) faces (those with a one right of their last
star); the rightmost square (a0,b0) needs its own sums depending on whether
j = k.  The grand total is the d-th Betti number.
"""

from dataclasses import dataclass
from math import comb

from . import diagrams
from .errors import UseVertexCount
from .diagrams import Triple


@dataclass
class BettiBreakdown:
    triple: Triple
    a0: int
    b0: int
    per_square: list  # (a, b, count, source) with source in {type1, type3, type1c}
    total: int

    def to_json(self):
        return {
            "triple": [self.triple.d, self.triple.i, self.triple.j],
            "a0": self.a0,
            "b0": self.b0,
            "squares": [
                {"a": a, "b": b, "count": cnt, "source": src}
                for a, b, cnt, src in self.per_square
            ],
            "total": self.total,
        }


def a0_b0(n, k, t):
    """Label of the rightmost square containing unmatched faces."""
    t.check(n, k)
    a0 = max(n - t.d - k, n - t.d - 1 - t.j)
    return a0, n - t.d - 1 - a0


def count_type1(n, a, b):
    """Faces of square (a,b) with a one right of their last star:
    C(n,a) * C(n-a-1, b-1)."""
    return comb(n, a) * comb(n - a - 1, b - 1)


def count_rightmost(n, k, t):
    """Unmatched faces in the square (a0,b0).

    j = k: the type-3 sum, plus the type-1 term when a0 < i.
    j < k: the type-1(c) sum.
    """
    d, i, j = t.d, t.i, t.j
    a0, b0 = a0_b0(n, k, t)
    if j == k:
        total = sum(
            comb(n - 1 - c, a0 - 1) * comb(d + k - 1 - c, d) for c in range(k)
        )
        if a0 < i:
            total += count_type1(n, a0, b0)
        return total
    return sum(
        comb(n - 1 - c, j - 1) * comb(d + a0 - c, d) for c in range(a0 + 1)
    )


def canonicalize(n, k, t):
    """Replace a triple by the canonical one describing the same diagram."""
    t.check(n, k)
    canon = diagrams.canonical_triple(diagrams.diagram_of_triple(n, k, t))
    assert canon is not None
    return canon


def betti_number(n, k, t):
    """Unmatched-face count of (d,i,j) with its per-square breakdown."""
    t = canonicalize(n, k, t)
    if t.d == 0:
        raise UseVertexCount(
            f"(0,{t.i},{t.j}) has no grid squares; reduced rank is C({n},{k})-1"
        )
    d, i, j = t.d, t.i, t.j
    a0, b0 = a0_b0(n, k, t)
    per_square = []
    right = sum(
        (comb(n - 1 - c, a0 - 1) * comb(d + k - 1 - c, d) for c in range(k))
        if j == k
        else (comb(n - 1 - c, j - 1) * comb(d + a0 - c, d) for c in range(a0 + 1))
    )
    per_square.append((a0, b0, right, "type3" if j == k else "type1c"))
    if j == k and a0 < i:
        per_square.append((a0, b0, count_type1(n, a0, b0), "type1"))
    for a in range(a0 + 1, i):
        b = n - d - 1 - a
        per_square.append((a, b, count_type1(n, a, b), "type1"))
    total = sum(cnt for _, _, cnt, _ in per_square)
    return BettiBreakdown(t, a0, b0, per_square, total)
