"""Virtual characters of S_n attached to hypersimplex subcomplexes.

Characters are integer multisets of partitions of n.  The building blocks
f1..f4 are sums of two-row-plus-column hooks; their bracket data is
normalized in one place (`_term`): anything that is not a weakly
decreasing positive partition contributes nothing, which also encodes the
"= 0 when the top two rows tie" convention.  The closed-form homology
character, the alternating Hopf sum over unshaded squares, Pieri products,
hook-length dimensions, and a small-n trace oracle (Murnaghan-Nakayama
from scratch) all live here.
"""

from functools import cache, lru_cache
from math import comb, factorial, prod

from . import betti as betti_mod
from . import diagrams as diagrams_mod
from .errors import NotConcentrated, UseVertexCount

# ---------------------------------------------------------------------------
# partitions


def is_partition(parts):
    return all(
        isinstance(p, int) and p > 0 for p in parts
    ) and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def partitions_of(n):
    """All partitions of n, descending parts, reverse lexicographic."""

    def rec(total, mx):
        if total == 0:
            yield ()
            return
        for first in range(min(total, mx), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def format_partition(parts):
    """Bracket form with the run of ones abbreviated, e.g. [5,3,1^10]."""
    ones = sum(1 for p in parts if p == 1)
    body = [str(p) for p in parts if p > 1]
    if ones == 1:
        body.append("1")
    elif ones > 1:
        body.append(f"1^{ones}")
    return "[" + ",".join(body) + "]"


def parse_partition(text):
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            p, e = tok.split("^")
            parts.extend([int(p)] * int(e))
        else:
            parts.append(int(tok))
    parts = tuple(sorted(parts, reverse=True))
    if not is_partition(parts):
        raise ValueError(f"{text!r} is not a partition")
    return parts


@lru_cache(maxsize=None)
def hook_dimension(parts):
    """Number of standard tableaux of the shape, by the hook product."""
    n = sum(parts)
    conj = conjugate(parts)
    hooks = prod(
        parts[r] - c + conj[c] - r - 1
        for r in range(len(parts))
        for c in range(parts[r])
    )
    return factorial(n) // hooks


def conjugate(parts):
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p > c) for c in range(parts[0])
    )


# ---------------------------------------------------------------------------
# virtual character sums


class CharacterSum:
    """Finite integer combination of irreducible characters chi^lambda."""

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for lam, mult in dict(terms).items():
                if mult:
                    self.terms[tuple(lam)] = mult

    def __add__(self, other):
        out = dict(self.terms)
        for lam, mult in other.terms.items():
            out[lam] = out.get(lam, 0) + mult
        return CharacterSum(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for lam, mult in other.terms.items():
            out[lam] = out.get(lam, 0) - mult
        return CharacterSum(out)

    def __rmul__(self, scalar):
        return CharacterSum({lam: scalar * m for lam, m in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, CharacterSum) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms):
            m = self.terms[lam]
            coef = "" if m == 1 else f"{m}*"
            bits.append(f"{coef}{format_partition(lam)}")
        return " + ".join(bits)

    def dimension(self):
        return sum(m * hook_dimension(lam) for lam, m in self.terms.items())

    def is_genuine(self):
        return all(m > 0 for m in self.terms.values())

    def to_json(self):
        return [
            {"partition": format_partition(lam), "multiplicity": self.terms[lam]}
            for lam in sorted(self.terms)
        ]


def chi(parts):
    return CharacterSum({tuple(parts): 1})


def dimension(cs):
    return cs.dimension()


def _term(top, second, ones):
    """chi^[top, second, 1^ones] as a sum, zero unless it is a partition."""
    if ones < 0 or second < 1 or top < second:
        return CharacterSum()
    return chi((top, second) + (1,) * ones)


def f(idx, a, b, n):
    """The four hook-sum families; symmetric in (a,b), zero out of range."""
    if idx not in (1, 2, 3, 4):
        raise ValueError("idx must be 1..4")
    if a < b:
        a, b = b, a
    if b < 0:
        return CharacterSum()
    out = CharacterSum()
    if idx == 1:
        for c in range(b):
            out = out + _term(a + c, b - c, n - a - b)
    elif idx == 2:
        for c in range(b + 1):
            out = out + _term(a + c, b + 1 - c, n - a - b - 1)
    elif idx == 3:
        for c in range(b):
            out = out + _term(a + 1 + c, b - c, n - a - b - 1)
    else:
        for c in range(b + 1):
            out = out + _term(a + 1 + c, b + 1 - c, n - a - b - 2)
    return out


# ---------------------------------------------------------------------------
# Pieri rules


def pieri_column(mu, m):
    """Partitions from mu plus m boxes, at most one new box per column."""
    mu = tuple(mu)
    out = set()

    def rec(i, prev_bound, built, left):
        if i == len(mu):
            if left == 0:
                out.add(tuple(built))
            elif left <= prev_bound:
                out.add(tuple(built) + (left,))
            return
        low = mu[i]
        high = min(prev_bound, mu[i] + left)
        for lam_i in range(low, high + 1):
            built.append(lam_i)
            rec(i + 1, mu[i], built, left - (lam_i - mu[i]))
            built.pop()

    if m == 0:
        return {mu}
    rec(0, mu[0] + m if mu else m, [], m)
    return out


def pieri_row(mu, m):
    """Partitions from mu plus m boxes, at most one new box per row."""
    mu = tuple(mu)
    out = set()
    rows = len(mu)

    def rec(i, built, left):
        if left < 0:
            return
        if i == rows:
            cand = tuple(built) + (1,) * left  # new rows get one box each
            if is_partition(cand):
                out.add(cand)
            return
        for add in (0, 1):
            lam_i = mu[i] + add
            if built and lam_i > built[-1]:
                continue
            built.append(lam_i)
            rec(i + 1, built, left - add)
            built.pop()

    if m == 0:
        return {mu}
    rec(0, [], m)
    return out


def induce_product_trivial(mu, m):
    """Character of (chi^mu x chi^[m]) induced up, as a CharacterSum."""
    out = CharacterSum()
    for lam in pieri_column(mu, m):
        out = out + chi(lam)
    return out


# ---------------------------------------------------------------------------
# chain-group characters


def char_Y(a, b, n, k):
    """Character of the span of the faces with a zeros and b ones.

    Grid squares follow the four-family sum; the vertex layer (a+b = n)
    carries no sign twist and is the plain induced trivial module.
    """
    if a + b == n:
        return induce_product_trivial((max(a, b),), min(a, b))
    return f(1, a, b, n) + f(2, a, b, n) + f(3, a, b, n) + f(4, a, b, n)


def char_Y_pieri(a, b, n):
    """Two-step Pieri route for a grid square: induce the sign column up
    through the zeros, then through the ones."""
    if a < b:
        a, b = b, a
    m = n - a - b
    step1 = CharacterSum()
    for lam in pieri_column((1,) * m, a):
        step1 = step1 + chi(lam)
    out = CharacterSum()
    for lam, mult in step1.terms.items():
        out = out + mult * induce_product_trivial(lam, b)
    return out


def homology_character(n, k, t):
    """Closed-form character on the top homology of the triple (d,i,j)."""
    t = betti_mod.canonicalize(n, k, t)
    if t.d == 0:
        raise UseVertexCount(
            "vertices-only subcomplex: character is the permutation module minus the trivial one"
        )
    d, i, j = t.d, t.i, t.j
    a1 = n - d - 1 - j
    out = f(4, a1, j - 1, n)
    for a in range(a1 + 1, i):
        ba = n - d - a - 1
        if a >= ba - 1:
            out = out + f(2, a, ba - 1, n) + f(4, a, ba - 1, n)
        else:
            out = out + f(3, a, ba - 1, n) + f(4, a, ba - 1, n)
    return out


def homology_character_hopf(n, k, diag, d):
    """Alternating sum of square characters over the unshaded grid squares.

    Only valid when the subcomplex's homology sits in the single degree d;
    the virtual sum then lands on a genuine character.
    """
    conc = diagrams_mod.classify_concentration(diag)
    if conc.kind != "single":
        raise NotConcentrated(f"unmatched faces in dimensions {conc.dims}")
    if conc.degree is not None and conc.degree != d:
        raise ValueError(f"subcomplex is concentrated in degree {conc.degree}, not {d}")
    out = CharacterSum()
    for a in range(n - k):
        for b in range(k):
            if diag.is_shaded(a, b):
                continue
            sign = -1 if (n - d - a - b) % 2 else 1
            out = out + sign * char_Y(a, b, n, k)
    return out


# ---------------------------------------------------------------------------
# small-n oracle: Murnaghan-Nakayama characters and signed traces


@cache
def character_value(lam, rho):
    """chi^lam at a permutation of cycle type rho, by rim-hook recursion."""
    lam, rho = tuple(lam), tuple(rho)
    if not rho:
        return 1
    t = rho[0]
    rest = rho[1:]
    ell = len(lam)
    beta = tuple(lam[i] + (ell - 1 - i) for i in range(ell))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted(beta_set - {b} | {nb}, reverse=True)
        mu = tuple(
            v - (ell - 1 - i) for i, v in enumerate(new_beta)
        )
        mu = tuple(p for p in mu if p > 0)
        total += (-1) ** height * character_value(mu, rest)
    return total


def class_size(rho, n):
    z = 1
    for part in set(rho):
        c = rho.count(part)
        z *= part**c * factorial(c)
    return factorial(n) // z


def trace_char_Y(n, k, a, b, rho):
    """Signed trace of a cycle-type-rho permutation on the (a,b) chain span.

    A basis face is fixed exactly when each cycle is constant on its
    symbols; a cycle of stars twists the cell orientation by the sign of
    the cycle, so it contributes (-1)^(length-1).
    """
    s = n - a - b
    cycles = tuple(rho)

    @cache
    def rec(i, za, ob):
        if i == len(cycles):
            return 1 if (za, ob) == (0, 0) else 0
        ln = cycles[i]
        total = 0
        if za >= ln:
            total += rec(i + 1, za - ln, ob)
        if ob >= ln:
            total += rec(i + 1, za, ob - ln)
        # remaining symbols are stars
        total += (-1) ** (ln - 1) * rec(i + 1, za, ob)
        return total

    val = rec(0, a, b)
    rec.cache_clear()
    return val


def decompose_trace(n, trace_fn):
    """Expand a class function into irreducibles; must come out integral."""
    classes = [tuple(rho) for rho in partitions_of(n)]
    sizes = {rho: class_size(rho, n) for rho in classes}
    values = {rho: trace_fn(rho) for rho in classes}
    fact = factorial(n)
    out = {}
    for lam in partitions_of(n):
        tot = sum(sizes[rho] * values[rho] * character_value(lam, rho) for rho in classes)
        if tot % fact:
            raise AssertionError(f"non-integral multiplicity at {lam}")
        if tot // fact:
            out[lam] = tot // fact
    return CharacterSum(out)


def char_Y_trace_oracle(n, k, a, b):
    """char_Y recomputed from signed permutation traces, n small."""
    return decompose_trace(n, lambda rho: trace_char_Y(n, k, a, b, rho))
