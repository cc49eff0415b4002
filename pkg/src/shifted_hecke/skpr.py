"""Products of weak K-Knuth classes and the Littlewood-Richardson rule.

The algebra here is spanned by formal sums [[h]] of all words equivalent to
an initial word h.  A class is tracked through its set of insertion
tableaux; for unique rectification targets that set is a single tableau and
products become fully computable: the product class decomposes over the
tableaux extending T1 whose new cells read to a shifted copy of T2.  Sending
a class to the sum of K polynomials over its tableau shapes turns products
of classes into products of polynomials, which is where the structure
constants for K come from.
"""

from __future__ import annotations

from .core import (
    ShiftedTableau,
    StrictPartition,
    ValidationError,
    as_strict_partition,
    as_word,
    cells_to_tableau,
    format_word,
    is_initial,
    reading_word_of_cells,
)
from .equivalence import bounded_class, urt_by_construction, urt_tableau
from .insertion import insertion_tableau
from .symfun import K_poly, TruncatedPolynomial, first_differing_coefficient


def shift_word(word, n: int):
    """Increase every letter by n."""
    return tuple(x + int(n) for x in as_word(word))


def shuffle(u, v):
    """All interleavings of two words, with multiplicity.

    The result is a list of C(|u|+|v|, |u|) words, each preserving the
    internal order of both arguments.
    """
    u, v = as_word(u), as_word(v)
    out = []

    def rec(i: int, j: int, acc):
        if i == len(u) and j == len(v):
            out.append(tuple(acc))
            return
        if i < len(u):
            acc.append(u[i])
            rec(i + 1, j, acc)
            acc.pop()
        if j < len(v):
            acc.append(v[j])
            rec(i, j + 1, acc)
            acc.pop()

    rec(0, 0, [])
    return out


class WordClass:
    """The weak K-Knuth class of an initial word, seen through its tableaux.

    For a representative whose insertion tableau is a unique rectification
    target the tableau set is exact; otherwise it comes from a bounded
    search and the truncated flag records whether the budget was hit.
    """

    __slots__ = ("representative", "urt", "tableaux", "truncated")

    def __init__(self, representative, urt, tableaux, truncated):
        self.representative = representative
        self.urt = urt
        self.tableaux = tableaux
        self.truncated = truncated

    def shapes(self):
        return sorted({t.shape for t in self.tableaux},
                      key=lambda s: (sum(s.parts), s.parts))

    def __repr__(self):
        flag = "URT" if self.urt else ("bounded" + (", truncated" if self.truncated else ""))
        return (f"WordClass({format_word(self.representative)!r}, "
                f"{len(self.tableaux)} tableaux, {flag})")

    def to_json_dict(self) -> dict:
        return {
            "representative": list(self.representative),
            "urt": self.urt,
            "truncated": self.truncated,
            "tableaux": [t.to_json_dict() for t in
                         sorted(self.tableaux, key=lambda t: t.sort_key())],
        }


def word_class(word, max_len=None, max_states=None) -> WordClass:
    """Build the class of an initial word.

    The insertion tableau decides the route: a by-construction unique
    rectification target needs no search, anything else gets a bounded
    class exploration whose insertion tableaux are collected.
    """
    w = as_word(word)
    if not is_initial(w):
        raise ValidationError(f"{format_word(w)} is not an initial word")
    t = insertion_tableau(w)
    if urt_by_construction(t):
        return WordClass(w, True, frozenset({t}), False)
    members, truncated = bounded_class(w, weak=True,
                                       max_len=max_len, max_states=max_states)
    tableaux = frozenset(insertion_tableau(m) for m in members)
    return WordClass(w, False, tableaux, truncated)


# ---------------------------------------------------------------------------
# skew extensions

def _outer_shape_candidates(lam: StrictPartition, q: int):
    """Strict partitions nu containing lam with at most q new cells per row
    and at most q new rows.

    A strict row or column increase over a q-letter alphabet caps the growth
    in each direction, so this list covers every shape a filling could use.
    """
    if q == 0:
        return [lam]
    max_rows = len(lam.parts) + q
    out = []

    def rec(i: int, prev: int, acc):
        base = lam.parts[i] if i < len(lam.parts) else 0
        if base == 0:
            out.append(StrictPartition(acc))
        if i == max_rows:
            return
        for part in range(max(base, 1), min(base + q, prev - 1) + 1):
            acc.append(part)
            rec(i + 1, part, acc)
            acc.pop()

    rec(0, 10 ** 9, [])
    return out


def skew_fillings(lam, nu, lo: int, hi: int):
    """Increasing fillings of the shifted skew shape nu/lam over [lo, hi].

    Yields cell maps; rows and columns of the region increase strictly
    wherever two region cells are adjacent.
    """
    lam, nu = as_strict_partition(lam), as_strict_partition(nu)
    lam_cells = set(lam.cells())
    region = [c for c in nu.cells() if c not in lam_cells]
    if not set(lam_cells) <= set(nu.cells()):
        raise ValidationError("inner shape does not fit in the outer shape")
    filling: dict = {}

    def rec(i: int):
        if i == len(region):
            yield dict(filling)
            return
        r, c = region[i]
        floor = lo
        left = filling.get((r, c - 1))
        if left is not None:
            floor = max(floor, left + 1)
        above = filling.get((r - 1, c))
        if above is not None:
            floor = max(floor, above + 1)
        for v in range(floor, hi + 1):
            filling[(r, c)] = v
            yield from rec(i + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def _require_initial_urt(t: ShiftedTableau, name: str) -> int:
    entries = t.entry_set()
    n = len(entries)
    if entries != set(range(1, n + 1)):
        raise ValidationError(f"{name} must use the alphabet 1..{n} exactly")
    if not urt_by_construction(t):
        raise ValidationError(
            f"{name} is not a unique rectification target by construction")
    return n


def class_product_urt(t1: ShiftedTableau, t2: ShiftedTableau):
    """Tableaux of the product class of two unique rectification targets.

    Extends t1 by cells labeled n+1..n+m (n, m the alphabet sizes) in every
    way that stays an increasing shifted tableau, and keeps the extensions
    whose new cells read to the shifted copy of t2.  The reading words of
    the results represent the classes in the product decomposition.
    """
    if not isinstance(t1, ShiftedTableau):
        t1 = ShiftedTableau(t1)
    if not isinstance(t2, ShiftedTableau):
        t2 = ShiftedTableau(t2)
    if t2.size == 0:
        _require_initial_urt(t1, "t1")
        return [t1]
    if t1.size == 0:
        _require_initial_urt(t2, "t2")
        return [t2]
    n = _require_initial_urt(t1, "t1")
    m = _require_initial_urt(t2, "t2")
    target = t2.shift(n)
    lam = StrictPartition(t1.shape)
    base = t1.cells()
    found = []
    for nu in _outer_shape_candidates(lam, m):
        for filling in skew_fillings(lam, nu, n + 1, n + m):
            word = reading_word_of_cells(filling)
            if insertion_tableau(word) != target:
                continue
            combined = dict(base)
            combined.update(filling)
            whole = cells_to_tableau(combined)
            if isinstance(whole, ShiftedTableau):
                found.append(whole)
    found.sort(key=lambda t: t.sort_key())
    return found


def product_class_representatives(t1, t2):
    """Reading words of the product-class tableaux, as initial-class reps."""
    return [t.reading_word() for t in class_product_urt(t1, t2)]


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients

class LRTable:
    """Structure constants c^nu for one product K_lambda * K_mu."""

    __slots__ = ("lam", "mu", "coeffs")

    def __init__(self, lam, mu, coeffs):
        self.lam = as_strict_partition(lam)
        self.mu = as_strict_partition(mu)
        clean = {}
        for nu, c in dict(coeffs).items():
            nu = as_strict_partition(nu)
            c = int(c)
            if c < 0:
                raise ValidationError("coefficients must be nonnegative")
            if c:
                clean[nu] = c
        self.coeffs = clean

    def __getitem__(self, nu) -> int:
        return self.coeffs.get(as_strict_partition(nu), 0)

    def __eq__(self, other):
        if not isinstance(other, LRTable):
            return NotImplemented
        return (self.lam, self.mu, self.coeffs) == (other.lam, other.mu, other.coeffs)

    def __repr__(self):
        inner = ", ".join(f"{nu.parts}: {c}" for nu, c in self.sorted_items())
        return f"LRTable(lam={self.lam.parts}, mu={self.mu.parts}, {{{inner}}})"

    def sorted_items(self):
        return sorted(self.coeffs.items(),
                      key=lambda it: (it[0].size, it[0].parts))

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "coeffs": [{"nu": list(nu.parts), "c": c} for nu, c in self.sorted_items()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "LRTable":
        return cls(d["lambda"], d["mu"],
                   {tuple(item["nu"]): item["c"] for item in d["coeffs"]})


def lr_coefficients(lam, mu, kind: str = "minimal") -> LRTable:
    """Littlewood-Richardson table for K_lambda * K_mu.

    c^nu counts increasing fillings of nu/lambda over the alphabet of a
    unique rectification target T of shape mu whose reading words insert
    to T.  Any URT of shape mu gives the same table; kind picks the
    minimal or superstandard construction.
    """
    lam = as_strict_partition(lam)
    mu = as_strict_partition(mu)
    if mu.size == 0:
        return LRTable(lam, mu, {lam: 1})
    target = urt_tableau(kind, mu)
    q = max(target.entry_set())
    coeffs: dict = {}
    for nu in _outer_shape_candidates(lam, q):
        if nu == lam:
            continue
        count = 0
        for filling in skew_fillings(lam, nu, 1, q):
            word = reading_word_of_cells(filling)
            if insertion_tableau(word) == target:
                count += 1
        if count:
            coeffs[nu] = count
    return LRTable(lam, mu, coeffs)


# ---------------------------------------------------------------------------
# the homomorphism into symmetric functions

def phi(h_or_class, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """Image of a class under the shape-to-K map.

    Sums K_poly over the shapes of the class's tableau set, with
    multiplicity one per tableau.
    """
    cls = h_or_class
    if not isinstance(cls, WordClass):
        cls = word_class(cls)
    total = TruncatedPolynomial.zero(nvars, maxdeg)
    for t in sorted(cls.tableaux, key=lambda t: t.sort_key()):
        total = total + K_poly(StrictPartition(t.shape), nvars, maxdeg)
    return total


class ProductReport:
    """Outcome of checking K_lambda * K_mu against its LR expansion."""

    __slots__ = ("lam", "mu", "table", "product", "expansion",
                 "matches", "first_difference")

    def __init__(self, lam, mu, table, product, expansion):
        self.lam = lam
        self.mu = mu
        self.table = table
        self.product = product
        self.expansion = expansion
        self.matches = product == expansion
        self.first_difference = first_differing_coefficient(product, expansion)

    def __repr__(self):
        return (f"ProductReport(lam={self.lam.parts}, mu={self.mu.parts}, "
                f"matches={self.matches})")


def verify_product_identity(lam, mu, nvars: int, maxdeg: int,
                            kind: str = "minimal") -> ProductReport:
    """Check K_lambda * K_mu == sum of c^nu K_nu as truncated polynomials."""
    lam = as_strict_partition(lam)
    mu = as_strict_partition(mu)
    table = lr_coefficients(lam, mu, kind=kind)
    product = K_poly(lam, nvars, maxdeg) * K_poly(mu, nvars, maxdeg)
    expansion = TruncatedPolynomial.zero(nvars, maxdeg)
    for nu, c in table.sorted_items():
        expansion = expansion + K_poly(nu, nvars, maxdeg).scale(c)
    return ProductReport(lam, mu, table, product, expansion)
