"""Brute-force integral reduced homology of a subcomplex, for validation.

The subcomplex's cells (vertices, in-scope faces, and the empty cell as
the augmentation) are modeled by the simplicial complex of strict chains
in their containment order.  That subdivision has canonical boundary
signs, the composite of consecutive boundaries is asserted to vanish, and
ranks and torsion come from exact integer Smith reduction of the boundary
matrices.  This is a desk-scale validator: a configurable simplex budget
(HYPERMORSE_BUDGET, default 5e6) refuses anything larger.
"""

import os
from dataclasses import dataclass
from heapq import heappush, heappop
from math import comb, gcd

from . import faces
from .errors import BudgetExceeded

DEFAULT_BUDGET = 5_000_000


def budget_limit(budget=None):
    if budget is not None:
        return budget
    env = os.environ.get("HYPERMORSE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# face poset and its order complex


def _cells_of(diag):
    """In-scope cells sorted by (dimension, word); the empty cell is implicit."""
    n, k = diag.n, diag.k
    cells = [(0, w) for w in faces.enumerate_vertices(n, k)]
    for a, b in diag.shaded_squares():
        d = n - a - b - 1
        cells.extend((d, w) for w in faces.iter_square(n, k, a, b))
    cells.sort()
    return cells


def _is_subface(small, big):
    """Word test: big's fixed positions must be fixed identically in small."""
    for cs, cb in zip(small, big):
        if cb != faces.STAR and cs != cb:
            return False
    return True


def cell_count(diag):
    n, k = diag.n, diag.k
    total = comb(n, k)
    for a, b in diag.shaded_squares():
        total += faces.square_count(n, k, a, b)
    return total


@dataclass
class ChainComplexData:
    """Bases and integer boundary matrices of the chain-order complex.

    levels[l] lists the l-simplices (tuples of cell indices, dimension
    increasing); boundary[l] gives, per l-simplex, its signed facet list
    [(index into levels[l-1], sign)].  Level -1 is the augmentation by the
    empty simplex, so homology read off this data is reduced.
    """

    cells: list
    levels: list
    boundary: list

    def simplex_count(self):
        return sum(len(lv) for lv in self.levels)

    def matrix(self, l):
        """Boundary of level l as a dense row-major list of lists."""
        nrows = 1 if l == 0 else len(self.levels[l - 1])
        mat = [[0] * len(self.levels[l]) for _ in range(nrows)]
        for col, facets in enumerate(self.boundary[l]):
            for row, sign in facets:
                mat[row][col] = sign
        return mat


def order_complex(diag, budget=None):
    """Chains of the cell poset, with the chain count checked against the
    budget before anything is materialized."""
    limit = budget_limit(budget)
    ncells = cell_count(diag)
    if ncells > limit:
        raise BudgetExceeded(
            f"{ncells} cells exceed the budget of {limit}", cells=ncells
        )
    cells = _cells_of(diag)
    ncells = len(cells)
    down = [[] for _ in range(ncells)]
    for xi, (dx, wx) in enumerate(cells):
        for yi in range(ncells):
            dy, wy = cells[yi]
            if dy >= dx:
                break
            if _is_subface(wy, wx):
                down[xi].append(yi)

    # chains ending at each cell, counted before being built
    ending = [0] * ncells
    for xi in range(ncells):
        ending[xi] = 1 + sum(ending[yi] for yi in down[xi])
    total = sum(ending)
    if total > limit:
        raise BudgetExceeded(
            f"{total} chains exceed the budget of {limit}",
            cells=ncells,
            chains=total,
        )

    chains_at = [None] * ncells
    for xi in range(ncells):
        mine = [(xi,)]
        for yi in down[xi]:
            mine.extend(ch + (xi,) for ch in chains_at[yi])
        chains_at[xi] = mine
    maxlen = max(len(ch) for mine in chains_at for ch in mine)
    levels = [[] for _ in range(maxlen)]
    for mine in chains_at:
        for ch in mine:
            levels[len(ch) - 1].append(ch)
    for lv in levels:
        lv.sort()
    index = [{ch: i for i, ch in enumerate(lv)} for lv in levels]

    boundary = []
    for l, lv in enumerate(levels):
        rows = []
        if l == 0:
            rows = [[(0, 1)] for _ in lv]  # augmentation into the empty simplex
        else:
            below = index[l - 1]
            for ch in lv:
                rows.append(
                    [
                        (below[ch[:i] + ch[i + 1 :]], -1 if i % 2 else 1)
                        for i in range(len(ch))
                    ]
                )
        boundary.append(rows)

    data = ChainComplexData(cells, levels, boundary)
    _assert_d_squared_zero(data)
    return data


def _assert_d_squared_zero(data):
    for l in range(1, len(data.levels)):
        lower = data.boundary[l - 1]
        for facets in data.boundary[l]:
            acc = {}
            for row, sign in facets:
                for rr, ss in lower[row]:
                    acc[rr] = acc.get(rr, 0) + sign * ss
            if any(v != 0 for v in acc.values()):
                raise AssertionError("boundary composite is nonzero")


# ---------------------------------------------------------------------------
# exact Smith reduction, sparse, smallest-pivot-first


def _sparse_from_columns(columns, nrows):
    rows = {}
    cols = {}
    for c, entries in enumerate(columns):
        for r, v in entries:
            if v:
                rows.setdefault(r, {})[c] = v
                cols.setdefault(c, set()).add(r)
    return rows, cols


def _smith_core(rows, cols):
    """Diagonalize by unimodular ops; returns the diagonal multiset.

    Pivots prefer the sparsest row or column and unit entries, so the
    boundary matrices of order complexes reduce with little fill and no
    coefficient growth.
    """
    heap = []
    for r, row in rows.items():
        heappush(heap, (len(row), 0, r))
    for c, col in cols.items():
        heappush(heap, (len(col), 1, c))
    diag = []

    def drop_entry(r, c):
        row = rows[r]
        del row[c]
        col = cols[c]
        col.discard(r)
        if not row:
            del rows[r]
        else:
            heappush(heap, (len(row), 0, r))
        if not col:
            del cols[c]
        else:
            heappush(heap, (len(col), 1, c))

    def set_entry(r, c, v):
        if v:
            rows[r][c] = v
            cols[c].add(r)
        elif c in rows[r]:
            drop_entry(r, c)

    def row_op(r, r0, f):
        # row r -= f * row r0
        base = rows.get(r0, {})
        row = rows.setdefault(r, {})
        for c, v in list(base.items()):
            cur = row.get(c, 0) - f * v
            if cur:
                row[c] = cur
                cols.setdefault(c, set()).add(r)
            elif c in row:
                del row[c]
                cols[c].discard(r)
                if not cols[c]:
                    del cols[c]
        if not row:
            del rows[r]
        else:
            heappush(heap, (len(row), 0, r))

    while rows:
        r0 = c0 = None
        while heap:
            size, kind, idx = heappop(heap)
            if kind == 0 and idx in rows and len(rows[idx]) == size:
                r0 = idx
                c0 = min(
                    rows[r0],
                    key=lambda c: (abs(rows[r0][c]), len(cols[c]), c),
                )
                break
            if kind == 1 and idx in cols and len(cols[idx]) == size:
                c0 = idx
                r0 = min(
                    cols[c0],
                    key=lambda r: (abs(rows[r][c0]), len(rows[r]), r),
                )
                break
        if r0 is None:
            r0 = min(rows)
            c0 = min(rows[r0])

        # Euclid steps until the pivot divides its whole row and column
        while True:
            v = rows[r0][c0]
            bad_r = next(
                (r for r in cols[c0] if r != r0 and rows[r][c0] % v), None
            )
            if bad_r is not None:
                row_op(bad_r, r0, rows[bad_r][c0] // v)
                r0 = bad_r  # remainder is smaller; move the pivot
                continue
            bad_c = next(
                (c for c in rows[r0] if c != c0 and rows[r0][c] % v), None
            )
            if bad_c is None:
                break
            # column op c -= q * c0, applied row-wise
            q = rows[r0][bad_c] // v
            for r in list(cols[c0]):
                set_entry(r, bad_c, rows[r].get(bad_c, 0) - q * rows[r][c0])
            c0 = bad_c

        v = rows[r0][c0]
        for r in list(cols[c0]):
            if r != r0:
                row_op(r, r0, rows[r][c0] // v)
        for c in list(rows[r0]):
            drop_entry(r0, c)
        diag.append(abs(v))
    return diag


def _canonical_factors(diag):
    """Divisibility chain d1 | d2 | ... from an arbitrary diagonal multiset."""
    vals = [d for d in diag if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                g = gcd(vals[i], vals[j])
                l = vals[i] * vals[j] // g if g else 0
                if (vals[i], vals[j]) != (g, l):
                    vals[i], vals[j] = g, l
                    changed = True
    return sorted(vals)


def smith_normal_form(matrix):
    """(invariant factors, rank) of an integer matrix given as rows."""
    columns_n = len(matrix[0]) if matrix else 0
    columns = [[] for _ in range(columns_n)]
    for r, row in enumerate(matrix):
        for c, v in enumerate(row):
            if v:
                columns[c].append((r, v))
    rows, cols = _sparse_from_columns(columns, len(matrix))
    factors = _canonical_factors(_smith_core(rows, cols))
    return factors, len(factors)


def _boundary_snf(data, l):
    nrows = 1 if l == 0 else len(data.levels[l - 1])
    rows, cols = _sparse_from_columns(data.boundary[l], nrows)
    return _canonical_factors(_smith_core(rows, cols))


@dataclass
class HomologyProfile:
    """Reduced ranks and torsion per degree, degree -1 included."""

    ranks: dict
    torsion: dict

    def nonzero_degrees(self):
        out = {d for d, r in self.ranks.items() if r}
        out |= {d for d, t in self.torsion.items() if t}
        return sorted(out)

    def to_json(self):
        degs = sorted(set(self.ranks) | set(self.torsion))
        return {
            str(d): {"rank": self.ranks.get(d, 0), "torsion": self.torsion.get(d, [])}
            for d in degs
        }


def reduced_homology(diag, budget=None):
    """Reduced integral homology from Smith reduction of the boundaries."""
    data = order_complex(diag, budget)
    top = len(data.levels) - 1
    factors = [_boundary_snf(data, l) for l in range(top + 1)]
    rank = [len(f) for f in factors]
    ranks, torsion = {}, {}
    sizes = [len(lv) for lv in data.levels]
    for l in range(top + 1):
        rank_next = rank[l + 1] if l < top else 0
        ranks[l] = sizes[l] - rank[l] - rank_next
        tor = factors[l + 1] if l < top else []
        torsion[l] = [f for f in tor if f > 1]
    ranks[-1] = 1 - rank[0]
    torsion[-1] = [f for f in factors[0] if f > 1]
    assert all(r >= 0 for r in ranks.values())
    return HomologyProfile(ranks, torsion)


# ---------------------------------------------------------------------------
# orientation action on the boundary sphere


def _det_sign(cols):
    """Sign of the determinant of a square matrix given as Fraction columns."""
    from fractions import Fraction

    m = [list(col) for col in cols]  # column-major; elimination over columns
    n = len(m)
    sign = 1
    for r in range(n):
        piv = next((c for c in range(r, n) if m[c][r] != 0), None)
        if piv is None:
            return 0
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        if m[r][r] < 0:
            sign = -sign
        for c in range(r + 1, n):
            if m[c][r]:
                f = Fraction(m[c][r], 1) / m[r][r]
                m[c] = [m[c][i] - f * m[r][i] for i in range(n)]
    return sign


def _barycenter(word, n, k):
    from fractions import Fraction

    verts = faces.vertices_of(word, n, k)
    m = len(verts)
    return tuple(
        Fraction(sum(int(v[i]) for v in verts), m) for i in range(n)
    )


def boundary_sphere_cycle(n, k, budget=None):
    """Fundamental cycle of J(n,k) minus its top cell, in the subdivision.

    Each maximal chain of proper cells is a full flag; its coefficient is
    the orientation of the simplex of barycenters completed by the body
    barycenter and the all-ones normal.  The result is asserted to be a
    cycle of the order complex.
    """
    from fractions import Fraction
    from . import diagrams as diagrams_mod

    diag = diagrams_mod.diagram_from_squares(
        n, k, [(a, b) for a in range(n - k) for b in range(k) if (a, b) != (0, 0)]
    )
    data = order_complex(diag, budget)
    top = len(data.levels) - 1
    assert top == n - 2
    centers = {}
    for d, w in data.cells:
        centers[w] = _barycenter(w, n, k)
    body = tuple(Fraction(k, n) for _ in range(n))
    ones = tuple(Fraction(1) for _ in range(n))
    coeffs = []
    for ch in data.levels[top]:
        pts = [centers[data.cells[i][1]] for i in ch]
        b0 = pts[0]
        cols = [tuple(p[i] - b0[i] for i in range(n)) for p in pts[1:]]
        cols.append(tuple(body[i] - b0[i] for i in range(n)))
        cols.append(ones)
        s = _det_sign(cols)
        assert s != 0
        coeffs.append(s)
    # cycle check: the signed boundary must vanish identically
    acc = {}
    for col, facets in enumerate(data.boundary[top]):
        for row, sg in facets:
            acc[row] = acc.get(row, 0) + coeffs[col] * sg
    assert all(v == 0 for v in acc.values()), "orientation signs are inconsistent"
    return data, coeffs


def coxeter_generator_top_sign(n, k, i, budget=None):
    """+1 or -1: the action of the transposition (i, i+1) on the top
    homology of the boundary sphere of J(n,k)."""
    if not 0 <= i <= n - 2:
        raise ValueError("generator index out of range")
    data, coeffs = boundary_sphere_cycle(n, k, budget)
    top = len(data.levels) - 1
    perm = list(range(n))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    cell_index = {w: idx for idx, (d, w) in enumerate(data.cells)}
    cell_map = [
        cell_index[faces.apply_permutation(perm, w)] for d, w in data.cells
    ]
    index = {ch: j for j, ch in enumerate(data.levels[top])}
    moved = [0] * len(coeffs)
    for j, ch in enumerate(data.levels[top]):
        moved[index[tuple(cell_map[x] for x in ch)]] = coeffs[j]
    if moved == coeffs:
        return 1
    if moved == [-c for c in coeffs]:
        return -1
    raise AssertionError("induced map is not plus or minus the identity")


def euler_characteristic(profile_or_data):
    if isinstance(profile_or_data, ChainComplexData):
        return sum(
            (-1) ** l * len(lv) for l, lv in enumerate(profile_or_data.levels)
        )
    return sum((-1) ** d * r for d, r in profile_or_data.ranks.items() if d >= 0)
