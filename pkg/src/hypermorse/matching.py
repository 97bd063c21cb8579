"""The (m0, m1) family of complete acyclic matchings on J(n,k).

Every face word other than the base vertex v0 = 1..10..0 satisfies exactly
one of ten replacement rules; the rule determines its partner one dimension
up or down.  The empty cell (the string "EMPTY") partners with v0.  Rules
5-8 are vacuous when m1 = 0, which is the degenerate parameter choice
(0,0) selected by some diagrams.
"""

from dataclasses import dataclass, field

from . import faces
from .errors import InvalidDiagram
from .faces import ONE, STAR, ZERO

EMPTY = "EMPTY"

UP_TYPES = {"1a", "1b", "1c", "3", "5", "7", "9"}
DOWN_TYPES = {"2a", "2b", "2c", "4", "6", "8", "10"}


@dataclass(frozen=True)
class MatchParams:
    m0: int
    m1: int

    def check(self, n, k):
        if (self.m0, self.m1) == (0, 0):
            return
        if not (0 <= self.m0 <= n - k - 1 and 1 <= self.m1 <= k - 1):
            raise ValueError(f"params {self} invalid for J({n},{k})")


def valid_params(n, k):
    """(0,0) plus every 0 <= m0 <= n-k-1, 1 <= m1 <= k-1."""
    faces.check_nk(n, k)
    out = [MatchParams(0, 0)]
    for m0 in range(n - k):
        for m1 in range(1, k):
            out.append(MatchParams(m0, m1))
    return out


def base_vertex(n, k):
    return ONE * k + ZERO * (n - k)


def _features(word):
    """(ones, zeros, one_right_of_last_star, zero_left_of_first_star)."""
    ones = word.count(ONE)
    zeros = word.count(ZERO)
    rs = word.rfind(STAR)
    if rs < 0:
        return ones, zeros, False, False
    one_right = ONE in word[rs + 1 :]
    zero_left = ZERO in word[: word.find(STAR)]
    return ones, zeros, one_right, zero_left


def guards(word, n, k, p):
    """Every rule tag whose guard holds; used to assert mutual exclusion."""
    m0, m1 = p.m0, p.m1
    ones, zeros, one_right, zero_left = _features(word)
    tags = []
    if ones <= k - 1 and one_right:
        if ones != m1:
            tags.append("1a")
        if ones == m1 and zeros > m0:
            tags.append("1b")
        if ones == m1 and zeros == m0 and not zero_left:
            tags.append("1c")
    if ones <= k - 2 and not one_right:
        if ones != m1 - 1:
            tags.append("2a")
        if ones == m1 - 1 and zeros > m0:
            tags.append("2b")
        if ones == m1 - 1 and zeros == m0 and not zero_left:
            tags.append("2c")
    if ones == k - 1 and zeros <= n - k - 1 and not one_right and zero_left:
        tags.append("3")
    if ones == k - 1 and zeros <= n - k - 2 and not one_right and not zero_left:
        tags.append("4")
    if ones == m1 and zeros <= m0 and one_right and zero_left:
        tags.append("5")
    if ones == m1 and zeros < m0 and one_right and not zero_left:
        tags.append("6")
    if ones == m1 - 1 and zeros <= m0 and not one_right and zero_left:
        tags.append("7")
    if ones == m1 - 1 and zeros < m0 and not one_right and not zero_left:
        tags.append("8")
    if ones == k and zeros == n - k and word != base_vertex(n, k):
        tags.append("9")
    if ones == k - 1 and zeros == n - k - 1 and not one_right and not zero_left:
        tags.append("10")
    return tags


def classify(word, n, k, p):
    """Rule tag of a face, "V0" for the base vertex, "V0-partner" for EMPTY."""
    if word == EMPTY:
        return "V0-partner"
    faces.validate(word, n, k)
    p.check(n, k)
    if word == base_vertex(n, k):
        return "V0"
    tags = guards(word, n, k, p)
    if len(tags) != 1:
        raise AssertionError(f"rules not a partition at {word!r}: {tags}")
    return tags[0]


def _replace_at(word, i, sym):
    return word[:i] + sym + word[i + 1 :]


def partner(word, n, k, p):
    """The matched face, an involution on faces plus EMPTY."""
    tag = classify(word, n, k, p)
    if tag == "V0-partner":
        return base_vertex(n, k)
    if tag == "V0":
        return EMPTY
    if tag in ("1a", "1b", "1c"):
        return _replace_at(word, word.rfind(ONE), STAR)
    if tag in ("2a", "2b", "2c"):
        return _replace_at(word, word.rfind(STAR), ONE)
    if tag in ("3", "5", "7"):
        return _replace_at(word, word.find(ZERO), STAR)
    if tag in ("4", "6", "8"):
        return _replace_at(word, word.find(STAR), ZERO)
    if tag == "9":
        out = _replace_at(word, word.find(ZERO), STAR)
        return _replace_at(out, out.rfind(ONE), STAR)
    # rule 10: an edge, leftmost star becomes 0 and the other becomes 1
    out = _replace_at(word, word.find(STAR), ZERO)
    return _replace_at(out, out.find(STAR), ONE)


def partner_square(tag, a, b):
    """Grid label of the partner of a face of the given tag in square (a,b)."""
    if tag in ("1a", "1b", "1c"):
        return a, b - 1
    if tag in ("2a", "2b", "2c"):
        return a, b + 1
    if tag in ("3", "5", "7"):
        return a - 1, b
    if tag in ("4", "6", "8"):
        return a + 1, b
    raise ValueError(f"no grid partner for tag {tag}")


@dataclass
class VectorField:
    """A set of (lower, upper) cell pairs on J(n,k) or a subcomplex of it.

    `pairs` uses face words with EMPTY for the empty cell; `params` is None
    for fields not produced by the rule family; `diagram` is None for the
    full complex.
    """

    n: int
    k: int
    pairs: list = field(default_factory=list)
    params: MatchParams | None = None
    diagram: object | None = None
    unmatched: list = field(default_factory=list)

    def cells(self):
        return iter_cells(self.n, self.k, self.diagram)

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "params": None if self.params is None else [self.params.m0, self.params.m1],
            "pairs": [list(pq) for pq in self.pairs],
            "unmatched": list(self.unmatched),
        }

    @classmethod
    def from_json(cls, data, n=None, k=None):
        if isinstance(data, list):  # bare array of pairs
            data = {"pairs": data}
        n = data.get("n", n)
        k = data.get("k", k)
        params = data.get("params")
        return cls(
            n=n,
            k=k,
            pairs=[tuple(pq) for pq in data["pairs"]],
            params=None if params is None else MatchParams(*params),
            unmatched=list(data.get("unmatched", [])),
        )

    def check_covers(self):
        """Reject pairs whose lower member is not a codimension-1 face."""
        n, k = self.n, self.k
        for lo, hi in self.pairs:
            if hi == EMPTY:
                raise ValueError("the empty cell cannot be an upper member")
            if lo == EMPTY:
                if STAR in hi:
                    raise ValueError(f"EMPTY may only pair with a vertex, not {hi}")
                continue
            faces.validate(hi, n, k)
            if STAR not in hi or lo not in faces.facets(hi, n, k):
                raise ValueError(f"{lo} is not a facet of {hi}")


def iter_cells(n, k, diagram=None):
    """EMPTY, the vertices, and every face whose square is in scope."""
    yield EMPTY
    yield from faces._iter_words(n, n - k, k)
    for a in range(n - k):
        for b in range(k):
            if diagram is None or diagram.is_shaded(a, b):
                yield from faces._iter_words(n, a, b)


def _in_scope(word, n, k, diagram):
    if diagram is None or word == EMPTY or STAR not in word:
        return True
    return diagram.is_shaded(*faces.square_of(word))


def build_vector_field(n, k, p, restriction=None):
    """Pair every in-scope cell with its partner when both sides are in scope.

    Cells whose partner leaves the restriction are recorded unmatched.
    """
    p.check(n, k)
    if restriction is not None:
        if (restriction.n, restriction.k) != (n, k):
            raise InvalidDiagram("restriction belongs to a different J(n,k)")
        restriction.check()
    pairs = []
    unmatched = []
    for cell in iter_cells(n, k, restriction):
        if cell == EMPTY:
            mate = base_vertex(n, k)
        else:
            mate = partner(cell, n, k, p)
        if not _in_scope(mate, n, k, restriction):
            unmatched.append(cell)
            continue
        lo, hi = (cell, mate) if _goes_up(cell, mate) else (mate, cell)
        if lo == cell:  # record each pair once, from its lower cell
            pairs.append((lo, hi))
    return VectorField(n, k, pairs, p, restriction, unmatched)


def _dim(cell, n, k):
    if cell == EMPTY:
        return -1
    s = cell.count(STAR)
    return 0 if s == 0 else s - 1


def _goes_up(cell, mate):
    if cell == EMPTY:
        return True
    if mate == EMPTY:
        return False
    return cell.count(STAR) < mate.count(STAR)


def verify_complete(vf):
    """True iff every cell of the scope occurs in exactly one pair."""
    seen = {}
    for lo, hi in vf.pairs:
        for c in (lo, hi):
            seen[c] = seen.get(c, 0) + 1
    if any(v != 1 for v in seen.values()):
        return False
    cells = set(vf.cells())
    return set(seen) == cells


def _cover_edges(vf):
    """Directed Hasse edges: up for unmatched covers, down for matched pairs."""
    n, k = vf.n, vf.k
    matched = set(vf.pairs)
    edges = {}

    def add(u, v):
        edges.setdefault(u, []).append(v)

    cells = list(vf.cells())
    scope = set(cells)
    for cell in cells:
        edges.setdefault(cell, [])
        if cell == EMPTY:
            continue
        if STAR not in cell:
            covers = [EMPTY]
        else:
            covers = [f for f in faces.facets(cell, n, k) if f in scope]
        for lower in covers:
            if (lower, cell) in matched:
                add(cell, lower)
            else:
                add(lower, cell)
    for u in edges:
        edges[u].sort()
    return edges


def verify_acyclic(vf):
    """(True, None) if the reversed-edge Hasse digraph is acyclic, else
    (False, witness) with one explicit directed cycle."""
    edges = _cover_edges(vf)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(edges, WHITE)
    for root in sorted(edges):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(edges[root]))]
        color[root] = GRAY
        path = [root]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GRAY:
                    cycle = path[path.index(nxt) :] + [nxt]
                    return False, cycle
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    path.append(nxt)
                    stack.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                path.pop()
                stack.pop()
    return True, None


def classify_counts_in_square(n, k, p, a, b):
    """{tag: count} over every face of square (a,b); enumeration order-free."""
    faces.check_label(n, k, a, b)
    p.check(n, k)
    m0, m1 = p.m0, p.m1
    out = {}
    for word in faces.iter_square_fast(n, k, a, b):
        rs = word.rfind(STAR)
        one_right = ONE in word[rs + 1 :]
        if one_right:
            if b != m1:
                tag = "1a"
            elif a > m0:
                tag = "1b"
            else:
                zero_left = ZERO in word[: word.find(STAR)]
                if zero_left:
                    tag = "5"
                elif a == m0:
                    tag = "1c"
                else:
                    tag = "6"
        elif b == k - 1:
            zero_left = ZERO in word[: word.find(STAR)]
            if zero_left:
                tag = "3"
            elif a <= n - k - 2:
                tag = "4"
            else:
                tag = "10"
        else:
            if b != m1 - 1:
                tag = "2a"
            elif a > m0:
                tag = "2b"
            else:
                zero_left = ZERO in word[: word.find(STAR)]
                if zero_left:
                    tag = "7"
                elif a == m0:
                    tag = "2c"
                else:
                    tag = "8"
        out[tag] = out.get(tag, 0) + 1
    return out


def unmatched_count_in_square(n, k, p, diagram, a, b):
    """Unmatched faces of square (a,b) under the restricted matching."""
    total = 0
    for tag, cnt in classify_counts_in_square(n, k, p, a, b).items():
        if tag not in UP_TYPES:
            continue
        pa, pb = partner_square(tag, a, b)
        inside = 0 <= pa <= n - k - 1 and 0 <= pb <= k - 1 and diagram.is_shaded(pa, pb)
        if not inside:
            total += cnt
    return total
