"""Grid diagrams for the S_n-invariant subcomplexes of J(n,k).

The grid has one square per orbit of positive-dimension faces, labeled
(a,b) = (zeros, ones) with 0 <= a <= n-k-1 and 0 <= b <= k-1; vertices and
the empty cell are always part of the subcomplex and live off the grid.
A shaded set is a subcomplex exactly when it is closed under increasing a
and increasing b, so a diagram is stored as one column threshold per row.

Rendering puts column a increasing leftward and row b increasing
downward, so the top-right square is (0,0) and the bottom-left
square is the edge orbit (n-k-1, k-1).
"""

from dataclasses import dataclass
from math import comb

from . import faces, matching
from .errors import InvalidDiagram, InvalidTriple
from .matching import MatchParams


@dataclass(frozen=True)
class Diagram:
    """Shaded grid, one threshold per row: (a,b) shaded iff a >= row_min[b]."""

    n: int
    k: int
    row_min: tuple  # length k, values in 0..n-k, n-k meaning an empty row

    def __post_init__(self):
        self.check()

    def check(self):
        n, k = self.n, self.k
        faces.check_nk(n, k)
        if len(self.row_min) != k:
            raise InvalidDiagram(f"need {k} rows, got {len(self.row_min)}")
        if any(not 0 <= t <= n - k for t in self.row_min):
            raise InvalidDiagram("row threshold out of range")
        if any(
            self.row_min[b] < self.row_min[b + 1] for b in range(k - 1)
        ):
            raise InvalidDiagram("not closed down-left: row thresholds must decrease")

    def is_shaded(self, a, b):
        return 0 <= a <= self.n - self.k - 1 and 0 <= b <= self.k - 1 and a >= self.row_min[b]

    def shaded_squares(self):
        return [
            (a, b)
            for b in range(self.k)
            for a in range(self.row_min[b], self.n - self.k)
        ]

    def is_empty(self):
        return all(t == self.n - self.k for t in self.row_min)

    def is_full(self):
        return all(t == 0 for t in self.row_min)

    def square_count(self):
        return sum(self.n - self.k - t for t in self.row_min)

    def face_count(self, with_vertices=True):
        total = comb(self.n, self.k) if with_vertices else 0
        for a, b in self.shaded_squares():
            total += faces.square_count(self.n, self.k, a, b)
        return total

    def to_text(self):
        """k lines of n-k characters, row b=0 first, a increasing leftward."""
        width = self.n - self.k
        lines = []
        for b in range(self.k):
            lines.append(
                "".join(
                    "#" if self.is_shaded(width - 1 - c, b) else "."
                    for c in range(width)
                )
            )
        return "\n".join(lines)

    def to_json(self):
        return {"n": self.n, "k": self.k, "shaded": [list(s) for s in self.shaded_squares()]}


def diagram_from_squares(n, k, shaded):
    """Diagram from an explicit (a,b) collection; must be down-left closed."""
    faces.check_nk(n, k)
    shaded = set(map(tuple, shaded))
    for a, b in shaded:
        if not (0 <= a <= n - k - 1 and 0 <= b <= k - 1):
            raise InvalidDiagram(f"square ({a},{b}) outside the grid")
    row_min = []
    for b in range(k):
        row = [a for a in range(n - k) if (a, b) in shaded]
        if not row:
            row_min.append(n - k)
            continue
        lo = min(row)
        if len(row) != n - k - lo:
            raise InvalidDiagram(f"row {b} is not a suffix in a")
        row_min.append(lo)
    diag = Diagram(n, k, tuple(row_min))
    if set(diag.shaded_squares()) != shaded:
        raise InvalidDiagram("shaded set is not closed down-left")
    return diag


def diagram_from_text(text, n, k):
    """Parse the '#'/'.' grid format, row b=0 first, a increasing leftward."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    width = n - k
    if len(lines) != k or any(len(ln) != width for ln in lines):
        raise InvalidDiagram(f"expected {k} lines of {width} characters")
    shaded = set()
    for b, ln in enumerate(lines):
        for c, ch in enumerate(ln):
            if ch == "#":
                shaded.add((width - 1 - c, b))
            elif ch != ".":
                raise InvalidDiagram(f"bad character {ch!r} in diagram")
    return diagram_from_squares(n, k, shaded)


def full_diagram(n, k):
    return Diagram(n, k, (0,) * k)


def vertices_only(n, k):
    return Diagram(n, k, (n - k,) * k)


def all_diagrams(n, k):
    """Every valid diagram, as weakly decreasing row thresholds."""
    faces.check_nk(n, k)
    top = n - k

    def rec(prefix, bound):
        if len(prefix) == k:
            yield Diagram(n, k, tuple(prefix))
            return
        for t in range(bound, -1, -1):
            yield from rec(prefix + [t], t)

    yield from rec([], top)


@dataclass(frozen=True)
class Triple:
    """(d,i,j): faces of dimension <= d plus the orbits with b >= j or a >= i.

    d = 0 is allowed and names the vertices-only subcomplex when i, j are
    at their vacuous maxima.
    """

    d: int
    i: int
    j: int

    def check(self, n, k):
        if not (0 <= self.d <= n - 2 and 0 < self.i <= n - k and 0 < self.j <= k):
            raise InvalidTriple(f"{self} out of range for J({n},{k})")


def diagram_of_triple(n, k, t):
    t.check(n, k)
    shaded = set()
    for a in range(n - k):
        for b in range(k):
            if n - a - b - 1 <= t.d or b >= t.j or a >= t.i:
                shaded.add((a, b))
    return diagram_from_squares(n, k, shaded)


def canonical_triple(diag):
    """The (d max, i min, j min) triple describing the diagram, or None."""
    n, k = diag.n, diag.k
    d = 0
    for cand in range(1, n - 1):
        band = [
            (a, b)
            for a in range(n - k)
            for b in range(k)
            if n - a - b - 1 <= cand
        ]
        if all(diag.is_shaded(a, b) for a, b in band):
            d = cand
        else:
            break
    i = next(
        (
            i
            for i in range(1, n - k + 1)
            if all(diag.is_shaded(a, b) for a in range(i, n - k) for b in range(k))
        ),
        n - k,
    )
    j = next(
        (
            j
            for j in range(1, k + 1)
            if all(diag.is_shaded(a, b) for b in range(j, k) for a in range(n - k))
        ),
        k,
    )
    t = Triple(d, i, j)
    if diagram_of_triple(n, k, t) == diag:
        return t
    return None


def canonical_params(diag):
    """The matching a diagram dictates: (0,0) when no row is fully shaded
    or everything is, else m1 the lowest fully shaded row index and m0 the
    largest a unshaded in the row above it."""
    n, k = diag.n, diag.k
    full_rows = [b for b in range(k) if diag.row_min[b] == 0]
    if not full_rows or diag.is_full():
        return MatchParams(0, 0)
    m1 = min(full_rows)
    if m1 == 0:
        return MatchParams(0, 0)
    unshaded = [a for a in range(n - k) if not diag.is_shaded(a, m1 - 1)]
    return MatchParams(max(unshaded), m1)


def m_square(diag):
    """Grid label of the square M = (m0, m1) for the canonical matching."""
    p = canonical_params(diag)
    return p.m0, p.m1


def unmatched_candidate_squares(diag):
    """Squares that can hold unmatched faces under the canonical matching:
    the highest shaded square of each column up to M's column (top row
    excluded), plus the rightmost shaded square of an incomplete bottom
    row."""
    n, k = diag.n, diag.k
    out = []
    m0, _ = m_square(diag)
    for a in range(n - k - 1, m0 - 1, -1):
        col = [b for b in range(k) if diag.is_shaded(a, b)]
        if not col:
            continue
        top = min(col)
        if top > 0:
            out.append((a, top))
    bottom = [a for a in range(n - k) if diag.is_shaded(a, k - 1)]
    if bottom and len(bottom) < n - k:
        square = (min(bottom), k - 1)
        if square not in out:
            out.append(square)
    return sorted(out)


def unmatched_squares(diag):
    """[(label, count)] of unmatched faces per square, counted by
    exhaustive classification under the canonical matching."""
    n, k = diag.n, diag.k
    p = canonical_params(diag)
    out = []
    for a, b in unmatched_candidate_squares(diag):
        cnt = matching.unmatched_count_in_square(n, k, p, diag, a, b)
        if cnt:
            out.append(((a, b), cnt))
    return out


@dataclass(frozen=True)
class Concentration:
    """Where the unmatched faces (hence the reduced homology) live.

    kind "single": one dimension `degree` (None for the full complex, which
    has no unmatched faces at all; 0 for the vertices-only subcomplex).
    kind "multi": `dims` lists the distinct unmatched dimensions.
    """

    kind: str
    degree: int | None = None
    squares: tuple = ()
    dims: tuple = ()

    def to_json(self):
        if self.kind == "single":
            return {
                "kind": "single",
                "degree": self.degree,
                "squares": [list(s) for s in self.squares],
            }
        return {"kind": "multi", "dims": list(self.dims)}


def classify_concentration(diag):
    n, k = diag.n, diag.k
    if diag.is_full():
        return Concentration("single", None, ())
    if diag.is_empty():
        return Concentration("single", 0, ())
    squares = unmatched_candidate_squares(diag)
    dims = sorted({n - a - b - 1 for a, b in squares})
    if len(dims) == 1:
        return Concentration("single", dims[0], tuple(squares))
    return Concentration("multi", None, tuple(squares), tuple(dims))


def render_svg(diag, cell=24):
    """SVG of the grid: shaded squares, darker unmatched squares, a dot
    on the square M."""
    n, k = diag.n, diag.k
    width = n - k
    pad = 2
    W, H = width * cell + 2 * pad, k * cell + 2 * pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">'
    ]
    dark = set(unmatched_candidate_squares(diag)) if not diag.is_empty() else set()
    for b in range(k):
        for c in range(width):
            a = width - 1 - c
            x, y = pad + c * cell, pad + b * cell
            if diag.is_shaded(a, b):
                fill = "#777777" if (a, b) in dark else "#bbbbbb"
            else:
                fill = "#ffffff"
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                f'fill="{fill}" stroke="#444444" stroke-width="1"/>'
            )
    m0, m1 = m_square(diag)
    cx = pad + (width - 1 - m0) * cell + cell / 2
    cy = pad + m1 * cell + cell / 2
    parts.append(f'<circle cx="{cx}" cy="{cy}" r="{cell / 6}" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts)
