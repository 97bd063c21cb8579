"""Faces of the hypersimplex J(n,k) as words over {0,1,*}.

A word names the face spanned by all vertices (0/1 words with exactly k
ones) that agree with it off the starred positions.  Canonical words are
either vertex words (no stars) or words with s >= 2 stars whose star block
is not forced, i.e. 1 <= k - ones <= s - 1.  Everything in the package is
built on these strings plus the ambient (n, k).
"""

from itertools import combinations
from math import comb

from .errors import InvalidFaceCode, InvalidLabel, NoFacets

ZERO, ONE, STAR = "0", "1", "*"
ALPHABET = (ZERO, ONE, STAR)  # lexicographic order 0 < 1 < * for enumeration
_RANK = {ZERO: 0, ONE: 1, STAR: 2}


def lex_key(word):
    """Sort key realizing the 0 < 1 < * order on words."""
    return [_RANK[c] for c in word]


def check_nk(n, k):
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n - 1):
        raise ValueError(f"need integers with 1 <= k <= n-1, got n={n}, k={k}")


def counts(word):
    """(zeros, ones, stars) of a word."""
    return word.count(ZERO), word.count(ONE), word.count(STAR)


def names_face(word, n, k):
    """True if the word denotes a (possibly relabeled) face of J(n,k)."""
    if len(word) != n or any(c not in ALPHABET for c in word):
        return False
    zeros, ones, stars = counts(word)
    if stars == 0:
        return ones == k
    return 0 <= k - ones <= stars and zeros <= n - k


def is_canonical(word, n, k):
    if len(word) != n or any(c not in ALPHABET for c in word):
        return False
    zeros, ones, stars = counts(word)
    if stars == 0:
        return ones == k
    return stars >= 2 and 1 <= k - ones <= stars - 1


def validate(word, n, k):
    check_nk(n, k)
    if not is_canonical(word, n, k):
        raise InvalidFaceCode(f"{word!r} is not a canonical face of J({n},{k})")


def normalize(word, n, k):
    """Canonical form of any word naming a face.

    Star words whose fill is forced (k - ones equal to 0 or to the star
    count) collapse to their vertex; canonical words pass through.
    """
    check_nk(n, k)
    if not names_face(word, n, k):
        raise InvalidFaceCode(f"{word!r} names no face of J({n},{k})")
    ones = word.count(ONE)
    stars = word.count(STAR)
    if stars == 0:
        return word
    need = k - ones
    if need == 0:
        return word.replace(STAR, ZERO)
    if need == stars:
        return word.replace(STAR, ONE)
    return word


def face_dimension(word, n, k):
    """0 for vertices, n - zeros - ones - 1 otherwise."""
    validate(word, n, k)
    stars = word.count(STAR)
    return 0 if stars == 0 else stars - 1


def square_of(word):
    """Grid label (zeros, ones) of a positive-dimension face word."""
    return word.count(ZERO), word.count(ONE)


def check_label(n, k, a, b):
    check_nk(n, k)
    if not (0 <= a <= n - k - 1 and 0 <= b <= k - 1):
        raise InvalidLabel(f"square ({a},{b}) outside the grid of J({n},{k})")


def square_count(n, k, a, b):
    """Number of faces with a zeros and b ones: C(n,a) * C(n-a,b)."""
    check_label(n, k, a, b)
    return comb(n, a) * comb(n - a, b)


def _iter_words(n, zeros, ones):
    """All words with the given symbol counts, lexicographic (0 < 1 < *)."""
    stars = n - zeros - ones
    word = []

    def rec(z, o, s):
        if z + o + s == 0:
            yield "".join(word)
            return
        if z:
            word.append(ZERO)
            yield from rec(z - 1, o, s)
            word.pop()
        if o:
            word.append(ONE)
            yield from rec(z, o - 1, s)
            word.pop()
        if s:
            word.append(STAR)
            yield from rec(z, o, s - 1)
            word.pop()

    yield from rec(zeros, ones, stars)


def iter_square(n, k, a, b):
    """Faces of the square (a,b) in lexicographic order."""
    check_label(n, k, a, b)
    return _iter_words(n, a, b)


def enumerate_square(n, k, label):
    a, b = label
    return list(iter_square(n, k, a, b))


def iter_square_fast(n, k, a, b):
    """Faces of square (a,b) in an unspecified order, minimal overhead."""
    check_label(n, k, a, b)
    base = [STAR] * n
    positions = range(n)
    for zs in combinations(positions, a):
        w = base[:]
        for p in zs:
            w[p] = ZERO
        rest = [p for p in positions if w[p] == STAR]
        for os_ in combinations(rest, b):
            v = w[:]
            for p in os_:
                v[p] = ONE
            yield "".join(v)


def enumerate_vertices(n, k):
    """All C(n,k) vertex words, lexicographic order."""
    check_nk(n, k)
    return list(_iter_words(n, n - k, k))


def iter_faces(n, k, include_vertices=True):
    """Every canonical face word, vertices first then squares by (a,b)."""
    check_nk(n, k)
    if include_vertices:
        yield from _iter_words(n, n - k, k)
    for a in range(n - k):
        for b in range(k):
            yield from _iter_words(n, a, b)


def vertices_of(word, n, k):
    """Vertex words of the face, by filling the stars every valid way."""
    validate(word, n, k)
    stars = [i for i, c in enumerate(word) if c == STAR]
    if not stars:
        return [word]
    need = k - word.count(ONE)
    out = []
    for one_slots in combinations(stars, need):
        w = list(word.replace(STAR, ZERO))
        for i in one_slots:
            w[i] = ONE
        out.append("".join(w))
    return out


def facets(word, n, k):
    """Codimension-1 faces, each star replaced by 0 or 1 where valid.

    Replacements that force the remaining stars (a dimension drop of more
    than one) are excluded, except for edges, whose two endpoints are
    returned in vertex form.
    """
    validate(word, n, k)
    stars = word.count(STAR)
    if stars == 0:
        raise NoFacets(f"{word!r} is a vertex")
    dim = stars - 1
    out = set()
    for i, c in enumerate(word):
        if c != STAR:
            continue
        for sym in (ZERO, ONE):
            cand = word[:i] + sym + word[i + 1 :]
            if not names_face(cand, n, k):
                continue
            norm = normalize(cand, n, k)
            if face_dimension(norm, n, k) == dim - 1:
                out.add(norm)
    return sorted(out, key=lex_key)


def apply_permutation(perm, word):
    """Move the symbol at position i to position perm[i]."""
    n = len(word)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the positions")
    out = [None] * n
    for i, c in enumerate(word):
        out[perm[i]] = c
    return "".join(out)


def face_count_by_dimension(n, k):
    """{dimension: count} over positive-dimension faces, closed form."""
    check_nk(n, k)
    dims = {}
    for a in range(n - k):
        for b in range(k):
            d = n - a - b - 1
            dims[d] = dims.get(d, 0) + square_count(n, k, a, b)
    return dict(sorted(dims.items()))


def iface_count_generators(n, k, i):
    """Count of i-faces from the generator-interval description.

    Independent route: intervals {s_j,...,s_{j+i-1}} with
    1 <= j <= k <= j+i-1 <= n-1 contribute C(n,i+1)*C(n-i-1,j-1) faces.
    """
    check_nk(n, k)
    total = 0
    for j in range(1, k + 1):
        if j + i - 1 >= k and j + i - 1 <= n - 1:
            total += comb(n, i + 1) * comb(n - i - 1, j - 1)
    return total
