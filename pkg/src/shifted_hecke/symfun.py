"""Truncated polynomial arithmetic and tableau generating functions.

Polynomials live in a fixed number of variables and keep only terms of total
degree at most maxdeg, with exact integer coefficients.  On top of that sit
the weak shifted stable Grothendieck polynomial K, its set-valued sibling GP,
the unshifted stable Grothendieck polynomial G, fundamental quasisymmetric
functions, and the standardization and relabeling maps connecting weak
set-valued tableaux to words.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .core import (
    Entry,
    SetValuedShiftedTableau,
    ShiftedTableau,
    StrictPartition,
    UnshiftedSetValuedTableau,
    ValidationError,
    WeakSetValuedShiftedTableau,
    as_partition,
    as_strict_partition,
)
from .equivalence import urt_by_construction, urt_tableau
from .insertion import (
    descent_set,
    descent_set_recording,
    hecke_insertion_tableau,
    insertion_tableau,
    weak_descent_set,
)


class TruncatedPolynomial:
    """Sparse integer polynomial truncated above a total degree."""

    __slots__ = ("nvars", "maxdeg", "terms")

    def __init__(self, nvars: int, maxdeg: int, terms=None):
        if nvars < 1 or maxdeg < 0:
            raise ValidationError("need at least one variable and maxdeg >= 0")
        self.nvars = nvars
        self.maxdeg = maxdeg
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValidationError(f"bad exponent vector {exp}")
            if sum(exp) > maxdeg or coef == 0:
                continue
            clean[exp] = clean.get(exp, 0) + int(coef)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, nvars: int, maxdeg: int) -> "TruncatedPolynomial":
        return cls(nvars, maxdeg)

    @classmethod
    def one(cls, nvars: int, maxdeg: int) -> "TruncatedPolynomial":
        return cls(nvars, maxdeg, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, i: int, nvars: int, maxdeg: int) -> "TruncatedPolynomial":
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, maxdeg, {tuple(exp): 1})

    def _check_compatible(self, other):
        if not isinstance(other, TruncatedPolynomial):
            raise ValidationError("expected a TruncatedPolynomial")
        if self.nvars != other.nvars or self.maxdeg != other.maxdeg:
            raise ValidationError("polynomials live in different truncated rings")

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def component(self, degree: int) -> "TruncatedPolynomial":
        """The homogeneous part of the given total degree."""
        return TruncatedPolynomial(
            self.nvars, self.maxdeg,
            {e: c for e, c in self.terms.items() if sum(e) == degree})

    def min_degree(self):
        """Smallest total degree with a nonzero term, or None when zero."""
        return min((sum(e) for e in self.terms), default=None)

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedPolynomial(self.nvars, self.maxdeg, out)

    def __sub__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return TruncatedPolynomial(self.nvars, self.maxdeg, out)

    def __neg__(self):
        return TruncatedPolynomial(self.nvars, self.maxdeg,
                                   {e: -c for e, c in self.terms.items()})

    def scale(self, k: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(self.nvars, self.maxdeg,
                                   {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) > self.maxdeg:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedPolynomial(self.nvars, self.maxdeg, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return (self.nvars, self.maxdeg, self.terms) == (
            other.nvars, other.maxdeg, other.terms)

    def __hash__(self):
        return hash((self.nvars, self.maxdeg, tuple(sorted(self.terms.items()))))

    def sorted_terms(self):
        """Terms in graded lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp) if e)
            if not mono:
                bits.append(str(coef))
            elif coef == 1:
                bits.append(mono)
            elif coef == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coef}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "maxdeg": self.maxdeg,
            "terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TruncatedPolynomial":
        return cls(d["nvars"], d["maxdeg"],
                   {tuple(t["exp"]): t["coef"] for t in d["terms"]})


def first_differing_coefficient(p: TruncatedPolynomial, q: TruncatedPolynomial):
    """Smallest graded-lex exponent where two polynomials disagree, or None."""
    p._check_compatible(q)
    exps = sorted(set(p.terms) | set(q.terms), key=lambda e: (sum(e), e))
    for e in exps:
        if p.terms.get(e, 0) != q.terms.get(e, 0):
            return e, p.terms.get(e, 0), q.terms.get(e, 0)
    return None


def fqs(length: int, descents, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """Fundamental quasisymmetric function for a length and descent set.

    Sums x_{i_1} .. x_{i_n} over weakly increasing chains that increase
    strictly after each position in the descent set.  Zero when the length
    exceeds maxdeg.
    """
    descents = {int(d) for d in descents}
    if length < 0 or (descents and not descents <= set(range(1, length))):
        raise ValidationError(f"descents {sorted(descents)} do not fit length {length}")
    if length == 0:
        return TruncatedPolynomial.one(nvars, maxdeg)
    if length > maxdeg:
        return TruncatedPolynomial.zero(nvars, maxdeg)
    terms: dict[tuple, int] = {}
    exp = [0] * nvars

    def rec(pos: int, minvar: int):
        if pos == length:
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + 1
            return
        for i in range(minvar, nvars + 1):
            exp[i - 1] += 1
            rec(pos + 1, i + 1 if (pos + 1) in descents else i)
            exp[i - 1] -= 1

    rec(0, 1)
    return TruncatedPolynomial(nvars, maxdeg, terms)


# ---------------------------------------------------------------------------
# tableau enumeration
#
# Fillings are generated box by box in row order.  A box's candidate entries
# are encoded as keys 2v-1 (primed v) and 2v (unprimed v), bounded below by
# the largest key among the boxes to its west and north.  Per-column unprimed
# and per-row primed occupancy sets impose the cross-box uniqueness rules,
# and a running budget caps the total number of entries.

def _shifted_fillings(shape: StrictPartition, nvars: int, maxdeg: int, multiset: bool):
    """Yield (cells, weight, size) over (weak) set-valued fillings of a shape."""
    boxes = shape.cells()
    n = len(boxes)
    if n == 0:
        yield {}, (0,) * nvars, 0
        return
    if n > maxdeg:
        return
    index = {cell: i for i, cell in enumerate(boxes)}
    left = [index.get((r, c - 1)) for (r, c) in boxes]
    above = [index.get((r - 1, c)) for (r, c) in boxes]
    max_key = 2 * nvars
    contents: list[tuple[int, ...]] = [()] * n
    weight = [0] * nvars
    col_unprimed: set = set()
    row_primed: set = set()

    def box_entries(i: int, size: int):
        r, c = boxes[i]
        lo = 1
        if left[i] is not None:
            lo = max(lo, contents[left[i]][-1])
        if above[i] is not None:
            lo = max(lo, contents[above[i]][-1])

        def grow(last_key: int, first: bool, size: int):
            if not first:
                yield size
            if size + (n - i - 1) >= maxdeg:
                return
            start = lo if first else (last_key if multiset else last_key + 1)
            for key in range(start, max_key + 1):
                primed = key % 2 == 1
                v = (key + 1) // 2
                if primed and r == c:
                    continue
                repeat = not first and key == last_key
                if repeat and not multiset:
                    continue
                mark = None
                if not repeat:
                    if primed:
                        if (r, v) in row_primed:
                            continue
                        mark = ("p", (r, v))
                        row_primed.add((r, v))
                    else:
                        if (c, v) in col_unprimed:
                            continue
                        mark = ("u", (c, v))
                        col_unprimed.add((c, v))
                contents[i] = contents[i] + (key,)
                weight[v - 1] += 1
                yield from grow(key, False, size + 1)
                weight[v - 1] -= 1
                contents[i] = contents[i][:-1]
                if mark is not None:
                    (row_primed if mark[0] == "p" else col_unprimed).discard(mark[1])

        yield from grow(0, True, size)

    def rec(i: int, size: int):
        if i == n:
            yield ({cell: contents[j] for j, cell in enumerate(boxes)},
                   tuple(weight), size)
            return
        if size + (n - i) > maxdeg:
            return
        for new_size in box_entries(i, size):
            yield from rec(i + 1, new_size)
        contents[i] = ()

    yield from rec(0, 0)


def _unshifted_fillings(parts: tuple[int, ...], nvars: int, maxdeg: int):
    """Yield (cells, weight, size) over set-valued fillings of a partition."""
    boxes = [(i, j) for i, p in enumerate(parts, 1) for j in range(1, p + 1)]
    n = len(boxes)
    if n == 0:
        yield {}, (0,) * nvars, 0
        return
    if n > maxdeg:
        return
    index = {cell: i for i, cell in enumerate(boxes)}
    left = [index.get((r, c - 1)) for (r, c) in boxes]
    above = [index.get((r - 1, c)) for (r, c) in boxes]
    contents: list[tuple[int, ...]] = [()] * n
    weight = [0] * nvars
    col_used: set = set()

    def box_entries(i: int, size: int):
        r, c = boxes[i]
        lo = 1
        if left[i] is not None:
            lo = max(lo, contents[left[i]][-1])
        if above[i] is not None:
            lo = max(lo, contents[above[i]][-1])

        def grow(last: int, first: bool, size: int):
            if not first:
                yield size
            if size + (n - i - 1) >= maxdeg:
                return
            for v in range(max(lo, last + (0 if first else 1)), nvars + 1):
                if (c, v) in col_used:
                    continue
                col_used.add((c, v))
                contents[i] = contents[i] + (v,)
                weight[v - 1] += 1
                yield from grow(v, False, size + 1)
                weight[v - 1] -= 1
                contents[i] = contents[i][:-1]
                col_used.discard((c, v))

        yield from grow(0, True, size)

    def rec(i: int, size: int):
        if i == n:
            yield ({cell: contents[j] for j, cell in enumerate(boxes)},
                   tuple(weight), size)
            return
        if size + (n - i) > maxdeg:
            return
        for new_size in box_entries(i, size):
            yield from rec(i + 1, new_size)
        contents[i] = ()

    yield from rec(0, 0)


def weak_set_valued_tableaux(shape, nvars: int, maxdeg: int):
    """All weak set-valued shifted tableaux within the value and size bounds."""
    shape = as_strict_partition(shape)
    out = []
    for cells, _, _ in _shifted_fillings(shape, nvars, maxdeg, multiset=True):
        entries = {cell: tuple(Entry.from_key(k) for k in keys)
                   for cell, keys in cells.items()}
        out.append(WeakSetValuedShiftedTableau(shape, entries))
    return out


def set_valued_tableaux(shape, nvars: int, maxdeg: int):
    """All set-valued shifted tableaux within the value and size bounds."""
    shape = as_strict_partition(shape)
    out = []
    for cells, _, _ in _shifted_fillings(shape, nvars, maxdeg, multiset=False):
        entries = {cell: tuple(Entry.from_key(k) for k in keys)
                   for cell, keys in cells.items()}
        out.append(SetValuedShiftedTableau(shape, entries))
    return out


def unshifted_set_valued_tableaux(parts, nvars: int, maxdeg: int):
    parts = as_partition(parts)
    out = []
    for cells, _, _ in _unshifted_fillings(parts, nvars, maxdeg):
        out.append(UnshiftedSetValuedTableau(parts, {c: vs for c, vs in cells.items()}))
    return out


def K_poly(shape, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """Weak shifted stable Grothendieck polynomial, truncated.

    Sum of x^T over weak set-valued shifted tableaux of the given shape with
    values at most nvars and at most maxdeg entries in total; x^T records how
    often each value appears, primed or not.
    """
    shape = as_strict_partition(shape)
    terms: dict[tuple, int] = {}
    for _, weight, _ in _shifted_fillings(shape, nvars, maxdeg, multiset=True):
        terms[weight] = terms.get(weight, 0) + 1
    return TruncatedPolynomial(nvars, maxdeg, terms)


def GP_poly(shape, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """Shifted stable Grothendieck polynomial: signed sum over set-valued
    shifted tableaux, excess entries weighted by -1 each."""
    shape = as_strict_partition(shape)
    base = shape.size
    terms: dict[tuple, int] = {}
    for _, weight, size in _shifted_fillings(shape, nvars, maxdeg, multiset=False):
        sign = -1 if (size - base) % 2 else 1
        terms[weight] = terms.get(weight, 0) + sign
    return TruncatedPolynomial(nvars, maxdeg, terms)


def G_poly(parts, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """Signless stable Grothendieck polynomial of an unshifted partition."""
    parts = as_partition(parts)
    terms: dict[tuple, int] = {}
    for _, weight, _ in _unshifted_fillings(parts, nvars, maxdeg):
        terms[weight] = terms.get(weight, 0) + 1
    return TruncatedPolynomial(nvars, maxdeg, terms)


def K_poly_via_words(tableau: ShiftedTableau, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """K through insertion: sum f over descent sets of words inserting to a URT.

    Enumerates words over the tableau's entry set up to length maxdeg and
    sums the fundamental quasisymmetric functions of their descent sets.
    Only unique rectification targets are accepted.
    """
    if not isinstance(tableau, ShiftedTableau):
        tableau = ShiftedTableau(tableau)
    if not urt_by_construction(tableau):
        raise ValidationError(
            "tableau is not a unique rectification target by construction")
    letters = sorted(tableau.entry_set())
    total = TruncatedPolynomial.zero(nvars, maxdeg)
    for length in range(tableau.size, maxdeg + 1):
        for w in product(letters, repeat=length):
            if insertion_tableau(w) == tableau:
                total = total + fqs(length, descent_set(w), nvars, maxdeg)
    return total


def G_poly_via_words(tableau, nvars: int, maxdeg: int) -> TruncatedPolynomial:
    """G through unshifted Hecke insertion, as a word sum over one tableau.

    Uses the weak descent convention: a repeated letter forces a strictly
    larger variable, matching set-valued boxes that cannot repeat a value.
    """
    from .core import IncreasingTableau

    if not isinstance(tableau, IncreasingTableau):
        tableau = IncreasingTableau(tableau)
    letters = sorted(tableau.entry_set())
    total = TruncatedPolynomial.zero(nvars, maxdeg)
    for length in range(tableau.size, maxdeg + 1):
        for w in product(letters, repeat=length):
            if hecke_insertion_tableau(w)[0] == tableau:
                total = total + fqs(length, weak_descent_set(w), nvars, maxdeg)
    return total


def geometric_substitute(p: TruncatedPolynomial) -> TruncatedPolynomial:
    """Substitute x_i -> -x_i/(1 - x_i), truncated.

    Each variable power expands by compositions: x^a becomes
    (-1)^a sum_e C(e-1, a-1) x^e for e from a to maxdeg.
    """
    nvars, maxdeg = p.nvars, p.maxdeg
    cache: dict[tuple[int, int], TruncatedPolynomial] = {}

    def power(var: int, a: int) -> TruncatedPolynomial:
        if (var, a) not in cache:
            sign = -1 if a % 2 else 1
            terms = {}
            for e in range(a, maxdeg + 1):
                exp = [0] * nvars
                exp[var] = e
                terms[tuple(exp)] = sign * comb(e - 1, a - 1)
            cache[(var, a)] = TruncatedPolynomial(nvars, maxdeg, terms)
        return cache[(var, a)]

    total = TruncatedPolynomial.zero(nvars, maxdeg)
    for exp, coef in p.terms.items():
        piece = TruncatedPolynomial(nvars, maxdeg, {(0,) * nvars: coef})
        for var, a in enumerate(exp):
            if a:
                piece = piece * power(var, a)
        total = total + piece
    return total


def is_symmetric(p: TruncatedPolynomial) -> bool:
    """Invariance under all adjacent variable swaps."""
    for i in range(p.nvars - 1):
        for exp, coef in p.terms.items():
            swapped = list(exp)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if p.terms.get(tuple(swapped), 0) != coef:
                return False
    return True


# ---------------------------------------------------------------------------
# standardization and relabeling

def standardize(tableau: SetValuedShiftedTableau) -> SetValuedShiftedTableau:
    """Refine a weak set-valued tableau's entries into labels 1..n.

    For each value, its primed occurrences standardize first, top to bottom,
    then its unprimed occurrences, left to right; primes are preserved.
    """
    occurrences = []
    for cell, entries in tableau.cells.items():
        for e in entries:
            occurrences.append((e.value, 0 if e.primed else 1,
                                cell[0] if e.primed else cell[1], cell, e.primed))
    occurrences.sort(key=lambda o: o[:3])
    cells: dict = {}
    for label, (_, _, _, cell, primed) in enumerate(occurrences, 1):
        cells.setdefault(cell, []).append(Entry(label, primed))
    return SetValuedShiftedTableau(tableau.shape,
                                   {c: tuple(es) for c, es in cells.items()})


def relabel(tableau: SetValuedShiftedTableau, sigma) -> WeakSetValuedShiftedTableau:
    """Replace label i of a standard tableau with s_i, keeping primes.

    The sequence sigma must be weakly increasing and strictly increasing
    across every descent of the recording-style descent set of the tableau.
    """
    positions = tableau.label_positions()
    n = len(positions)
    s = tuple(int(x) for x in sigma)
    if len(s) != n:
        raise ValidationError(f"sigma has {len(s)} letters for {n} labels")
    if any(x < 1 for x in s):
        raise ValidationError("sigma letters must be positive")
    dset = descent_set_recording(tableau)
    for i in range(1, n):
        if s[i - 1] > s[i] or (i in dset and s[i - 1] == s[i]):
            raise ValidationError(
                f"sigma does not agree with the descent set at position {i}")
    cells: dict = {}
    for label in range(1, n + 1):
        cell, primed = positions[label]
        cells.setdefault(cell, []).append(Entry(s[label - 1], primed))
    return WeakSetValuedShiftedTableau(tableau.shape,
                                       {c: tuple(es) for c, es in cells.items()})


# ---------------------------------------------------------------------------
# decomposition into unshifted stable Grothendieck polynomials

class DecompositionReport:
    """Outcome of expressing K as a sum of G polynomials over Hecke tableaux.

    The word-length budget is a heuristic: the collected tableau set is
    complete only if no longer word inserting to the target contributes a new
    unshifted Hecke tableau.  matches reports whether the G-sum already
    equals the K polynomial at this truncation.
    """

    __slots__ = ("shape", "tableaux", "g_sum", "k_poly", "matches",
                 "first_difference", "word_budget")

    def __init__(self, shape, tableaux, g_sum, k_poly, word_budget):
        self.shape = shape
        self.tableaux = tableaux
        self.g_sum = g_sum
        self.k_poly = k_poly
        self.matches = g_sum == k_poly
        self.first_difference = first_differing_coefficient(g_sum, k_poly)
        self.word_budget = word_budget

    def __repr__(self):
        return (f"DecompositionReport(shape={self.shape.parts}, "
                f"tableaux={len(self.tableaux)}, matches={self.matches})")


def grothendieck_decomposition(shape, nvars: int, maxdeg: int,
                               kind: str = "minimal",
                               word_budget: int | None = None) -> DecompositionReport:
    """Collect unshifted Hecke tableaux of words inserting to a URT of the
    shape, and compare the sum of their G polynomials against K."""
    shape = as_strict_partition(shape)
    target = urt_tableau(kind, shape)
    letters = sorted(target.entry_set())
    budget = maxdeg if word_budget is None else word_budget
    found = set()
    for length in range(shape.size, budget + 1):
        for w in product(letters, repeat=length):
            if insertion_tableau(w) == target:
                found.add(hecke_insertion_tableau(w)[0])
    tableaux = sorted(found, key=lambda t: (t.shape, t.rows))
    g_sum = TruncatedPolynomial.zero(nvars, maxdeg)
    for t in tableaux:
        g_sum = g_sum + G_poly(t.shape, nvars, maxdeg)
    return DecompositionReport(shape, tableaux, g_sum,
                               K_poly(shape, nvars, maxdeg), budget)
