"""Shifted shapes, primed entries, tableaux of several flavors, and words.

Coordinates are 1-indexed pairs (row, col).  In a shifted shape with row
lengths lam the i-th row occupies columns i .. i + lam[i-1] - 1, so a cell
(i, j) exists iff i <= j <= i + lam[i-1] - 1, and the main diagonal is the
set of cells with row == col.
"""

from __future__ import annotations

from functools import total_ordering
from itertools import chain

Cell = tuple[int, int]
Word = tuple[int, ...]


class ValidationError(ValueError):
    """An object violates its defining conditions."""


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    return x


class StrictPartition:
    """A strictly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, StrictPartition):
            parts = parts.parts
        parts = tuple(_int(p, "part") for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValidationError(f"parts must be positive, got {p}")
            if i and parts[i - 1] <= p:
                raise ValidationError(f"parts must strictly decrease, got {parts}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if isinstance(other, StrictPartition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"StrictPartition({self.parts!r})"

    def cells(self) -> list[Cell]:
        """All cells of the shifted shape, row-major."""
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(i, i + p)]

    def contains_cell(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self.parts) and r <= c <= r + self.parts[r - 1] - 1

    def contains(self, other: "StrictPartition") -> bool:
        other = as_strict_partition(other)
        if len(other) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))


def as_strict_partition(x) -> StrictPartition:
    if isinstance(x, StrictPartition):
        return x
    if isinstance(x, int):
        return StrictPartition((x,)) if x else StrictPartition(())
    return StrictPartition(tuple(x))


@total_ordering
class Entry:
    """A positive integer with an optional prime mark; 1' < 1 < 2' < 2 < ..."""

    __slots__ = ("value", "primed")

    def __init__(self, value: int, primed: bool = False):
        value = _int(value, "entry value")
        if value <= 0:
            raise ValidationError(f"entry value must be positive, got {value}")
        self.value = value
        self.primed = bool(primed)

    @property
    def sort_key(self) -> int:
        # 2v-1 for v', 2v for v: integer order realizes 1' < 1 < 2' < 2 < ...
        return 2 * self.value - (1 if self.primed else 0)

    def __eq__(self, other):
        if not isinstance(other, Entry):
            return NotImplemented
        return self.value == other.value and self.primed == other.primed

    def __lt__(self, other):
        if not isinstance(other, Entry):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __hash__(self):
        return hash(self.sort_key)

    def __repr__(self):
        return f"{self.value}'" if self.primed else f"{self.value}"

    @classmethod
    def from_key(cls, key: int) -> "Entry":
        return cls((key + 1) // 2, key % 2 == 1)

    @classmethod
    def parse(cls, text: str) -> "Entry":
        text = text.strip()
        try:
            if text.endswith("'"):
                return cls(int(text[:-1]), True)
            return cls(int(text))
        except ValueError:
            raise ValidationError(f"cannot parse entry {text!r}") from None

    def to_json_dict(self) -> dict:
        return {"v": self.value, "primed": self.primed}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Entry":
        return cls(d["v"], d.get("primed", False))


# ---------------------------------------------------------------------------
# words

def as_word(letters) -> Word:
    w = tuple(_int(x, "letter") for x in letters)
    for x in w:
        if x <= 0:
            raise ValidationError(f"letters must be positive, got {x}")
    return w


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            return as_word(int(t) for t in text.split(","))
        return as_word(int(ch) for ch in text)
    except ValueError:
        raise ValidationError(f"cannot parse word {text!r}") from None


def format_word(w) -> str:
    w = as_word(w)
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def restrict_word(w, lo: int, hi: int) -> Word:
    """Subsequence of letters x with lo <= x <= hi."""
    return tuple(x for x in as_word(w) if lo <= x <= hi)


def is_initial(w) -> bool:
    """True when the letter set is exactly {1, .., k} for some k >= 0."""
    w = as_word(w)
    return set(w) == set(range(1, max(w) + 1)) if w else True


# ---------------------------------------------------------------------------
# increasing shifted tableaux

class ShiftedTableau:
    """Increasing shifted tableau: rows and columns strictly increase."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(_int(v, "entry") for v in r) for r in rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValidationError("empty row in tableau")
            if any(v <= 0 for v in row):
                raise ValidationError("entries must be positive")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError(f"row {i + 1} is not strictly increasing")
            if i:
                prev = rows[i - 1]
                if len(prev) <= len(row):
                    raise ValidationError("row lengths must strictly decrease")
                # cell (i+1, c) sits directly below (i, c), offset k+1 in prev
                for k, v in enumerate(row):
                    if prev[k + 1] >= v:
                        raise ValidationError(f"column through row {i + 1} not increasing")
        self.rows = rows

    @property
    def shape(self) -> StrictPartition:
        return StrictPartition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        if not isinstance(other, ShiftedTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ShiftedTableau({self.rows!r})"

    def __str__(self):
        return self.to_text()

    def sort_key(self):
        return (tuple(len(r) for r in self.rows), self.rows)

    def value_at(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - r]

    def cells(self) -> dict[Cell, int]:
        return {(i, i + k): v for i, row in enumerate(self.rows, 1) for k, v in enumerate(row)}

    def entry_set(self) -> set[int]:
        return set(chain.from_iterable(self.rows))

    def reading_word(self) -> Word:
        """Rows read left to right, bottom row first."""
        return tuple(chain.from_iterable(reversed(self.rows)))

    def shift(self, n: int) -> "ShiftedTableau":
        """Add n to every entry."""
        return ShiftedTableau(tuple(tuple(v + n for v in r) for r in self.rows))

    def restrict(self, lo: int, hi: int):
        """Delete entries outside [lo, hi]; a straight result comes back as a
        ShiftedTableau, anything else as a SkewTableau."""
        kept = {cell: v for cell, v in self.cells().items() if lo <= v <= hi}
        return cells_to_tableau(kept)

    def to_text(self) -> str:
        lines = []
        for i, row in enumerate(self.rows, 1):
            lines.append("\t" * (i - 1) + "\t".join(str(v) for v in row))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "ShiftedTableau":
        rows = []
        for i, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            pad = len(line) - len(line.lstrip("\t"))
            if pad != i - 1:
                raise ValidationError(f"row {i} should be padded by {i - 1} tab stops")
            rows.append(tuple(int(t) for t in line.lstrip("\t").split("\t")))
        return cls(rows)

    def to_json_dict(self) -> dict:
        return {
            "shape": list(len(r) for r in self.rows),
            "cells": [
                {"row": r, "col": c, "entries": [{"v": v, "primed": False}]}
                for (r, c), v in sorted(self.cells().items())
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ShiftedTableau":
        shape = as_strict_partition(d["shape"])
        cells = {}
        for item in d["cells"]:
            entries = item["entries"]
            if len(entries) != 1 or entries[0].get("primed"):
                raise ValidationError("expected a single unprimed entry per cell")
            cells[(item["row"], item["col"])] = entries[0]["v"]
        if set(cells) != set(shape.cells()):
            raise ValidationError("cells do not match the declared shape")
        return cls(tuple(tuple(cells[(i, j)] for j in range(i, i + p))
                         for i, p in enumerate(shape, 1)))


def cells_to_tableau(cells: dict[Cell, int]):
    """Package a cell map as a ShiftedTableau when straight, else SkewTableau."""
    if not cells:
        return ShiftedTableau(())
    by_row: dict[int, dict[int, int]] = {}
    for (r, c), v in cells.items():
        by_row.setdefault(r, {})[c] = v
    nrows = max(by_row)
    straight = set(by_row) == set(range(1, nrows + 1)) and all(
        min(by_row[r]) == r and sorted(by_row[r]) == list(range(r, r + len(by_row[r])))
        for r in by_row
    )
    if straight:
        return ShiftedTableau(tuple(
            tuple(by_row[r][c] for c in sorted(by_row[r])) for r in range(1, nrows + 1)
        ))
    return SkewTableau(cells)


class SkewTableau:
    """Increasing filling of a shifted skew shape, stored sparsely.

    Outer/inner shapes may be given explicitly; otherwise they are inferred
    when every row 1..R holds at least one cell (an empty intermediate row
    makes the inner shape ambiguous, and the shapes stay None).
    """

    __slots__ = ("cells", "outer", "inner", "_key")

    def __init__(self, cells, outer=None, inner=None):
        cells = {(int(r), int(c)): _int(v, "entry") for (r, c), v in dict(cells).items()}
        if not cells and outer is None:
            raise ValidationError("empty skew tableau needs explicit shapes")
        by_row: dict[int, dict[int, int]] = {}
        for (r, c), v in cells.items():
            if r < 1 or c < r:
                raise ValidationError(f"cell ({r},{c}) is outside the shifted quadrant")
            if v <= 0:
                raise ValidationError("entries must be positive")
            by_row.setdefault(r, {})[c] = v
        for r, row in by_row.items():
            lo, hi = min(row), max(row)
            if sorted(row) != list(range(lo, hi + 1)):
                raise ValidationError(f"row {r} is not contiguous")
        cols: dict[int, list[int]] = {}
        for (r, c) in cells:
            cols.setdefault(c, []).append(r)
        for c, rs in cols.items():
            rs.sort()
            if rs != list(range(rs[0], rs[-1] + 1)):
                raise ValidationError(f"column {c} is not contiguous")
        for (r, c), v in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] <= v:
                raise ValidationError(f"row {r} is not increasing")
            if (r + 1, c) in cells and cells[(r + 1, c)] <= v:
                raise ValidationError(f"column {c} is not increasing")
        if outer is not None:
            outer = as_strict_partition(outer)
            inner = as_strict_partition(inner if inner is not None else ())
            if not outer.contains(inner):
                raise ValidationError("inner shape is not contained in outer shape")
            region = set(outer.cells()) - set(inner.cells())
            if set(cells) != region:
                raise ValidationError("cells do not match outer/inner shapes")
        else:
            outer, inner = _infer_skew_shapes(by_row)
        self.cells = cells
        self.outer = outer
        self.inner = inner
        self._key = tuple(sorted(cells.items()))

    def __eq__(self, other):
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"SkewTableau({dict(self._key)!r})"

    @property
    def size(self) -> int:
        return len(self.cells)

    def reading_word(self) -> Word:
        return reading_word_of_cells(self.cells)


def _infer_skew_shapes(by_row):
    """Per-row extents -> (outer, inner) strict partitions, or (None, None)."""
    nrows = max(by_row)
    if set(by_row) != set(range(1, nrows + 1)):
        return None, None
    lam = [max(by_row[r]) - r + 1 for r in range(1, nrows + 1)]
    mu = [min(by_row[r]) - r for r in range(1, nrows + 1)]
    k = sum(1 for m in mu if m)
    if any(mu[i] == 0 for i in range(k)):
        return None, None
    try:
        return StrictPartition(lam), StrictPartition(mu[:k])
    except ValidationError:
        return None, None


def reading_word_of_cells(cells: dict[Cell, int]) -> Word:
    """Rows read left to right, bottom row first."""
    return tuple(v for (r, c), v in sorted(cells.items(), key=lambda kv: (-kv[0][0], kv[0][1])))


def maximal_cells(cells) -> set[Cell]:
    """Cells with no neighbor of the same set to the east or south."""
    s = set(cells)
    return {(r, c) for (r, c) in s if (r, c + 1) not in s and (r + 1, c) not in s}


def minimal_cells(cells) -> set[Cell]:
    """Cells with no neighbor of the same set to the west or north."""
    s = set(cells)
    return {(r, c) for (r, c) in s if (r, c - 1) not in s and (r - 1, c) not in s}


# ---------------------------------------------------------------------------
# set-valued shifted tableaux

def _normalize_cellmap(cells) -> dict[Cell, tuple[Entry, ...]]:
    out = {}
    for cell, entries in dict(cells).items():
        r, c = cell
        es = tuple(sorted((e if isinstance(e, Entry) else Entry(*e) if isinstance(e, tuple) else Entry(e))
                          for e in entries))
        out[(int(r), int(c))] = es
    return out


def _validate_set_valued(shape: StrictPartition, cells: dict[Cell, tuple[Entry, ...]],
                         multiset: bool, kind: str):
    if set(cells) != set(shape.cells()):
        raise ValidationError(f"{kind}: cells do not match shape {shape.parts}")
    col_unprimed: set[tuple[int, int]] = set()
    row_primed: set[tuple[int, int]] = set()
    for (r, c) in sorted(cells):
        es = cells[(r, c)]
        if not es:
            raise ValidationError(f"{kind}: box ({r},{c}) is empty")
        if not multiset and len(set(es)) != len(es):
            raise ValidationError(f"{kind}: box ({r},{c}) repeats an entry")
        if r == c and any(e.primed for e in es):
            raise ValidationError(f"{kind}: primed entry on the main diagonal at ({r},{c})")
        for nb in ((r, c - 1), (r - 1, c)):
            if nb in cells and es[0] < cells[nb][-1]:
                raise ValidationError(f"{kind}: box ({r},{c}) starts below its neighbor {nb}")
        for e in set(es):
            if e.primed:
                if (r, e.value) in row_primed:
                    raise ValidationError(f"{kind}: {e} appears twice in row {r}")
                row_primed.add((r, e.value))
            else:
                if (c, e.value) in col_unprimed:
                    raise ValidationError(f"{kind}: {e} appears twice in column {c}")
                col_unprimed.add((c, e.value))


class SetValuedShiftedTableau:
    """Shifted tableau whose boxes hold nonempty sets of primed/unprimed entries."""

    __slots__ = ("shape", "cells", "_key")

    _multiset = False

    def __init__(self, shape, cells):
        shape = as_strict_partition(shape)
        cells = _normalize_cellmap(cells)
        _validate_set_valued(shape, cells, self._multiset, type(self).__name__)
        self.shape = shape
        self.cells = cells
        self._key = tuple(sorted(cells.items(), key=lambda kv: (kv[0], tuple(e.sort_key for e in kv[1]))))

    def __eq__(self, other):
        if not isinstance(other, type(self)) or not isinstance(self, type(other)):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash((type(self).__name__, self._key))

    def __repr__(self):
        return f"{type(self).__name__}({self.shape.parts!r}, {dict(self._key)!r})"

    def __str__(self):
        return self.to_text()

    @property
    def total_entries(self) -> int:
        return sum(len(es) for es in self.cells.values())

    def is_standard(self) -> bool:
        """Each of 1..n appears exactly once, primed or unprimed."""
        values = sorted(e.value for es in self.cells.values() for e in es)
        return values == list(range(1, len(values) + 1))

    def label_positions(self) -> dict[int, tuple[Cell, bool]]:
        if not self.is_standard():
            raise ValidationError("tableau is not standard")
        return {e.value: (cell, e.primed) for cell, es in self.cells.items() for e in es}

    def to_text(self) -> str:
        lines = []
        for i, p in enumerate(self.shape, 1):
            parts = []
            for j in range(i, i + p):
                es = self.cells[(i, j)]
                inner = ",".join(str(e) for e in es)
                parts.append(inner if len(es) == 1 else "{" + inner + "}")
            lines.append("\t" * (i - 1) + "\t".join(parts))
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str):
        cells = {}
        shape = []
        for i, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            pad = len(line) - len(line.lstrip("\t"))
            if pad != i - 1:
                raise ValidationError(f"row {i} should be padded by {i - 1} tab stops")
            toks = line.lstrip("\t").split("\t")
            shape.append(len(toks))
            for k, tok in enumerate(toks):
                tok = tok.strip()
                if tok.startswith("{") and tok.endswith("}"):
                    tok = tok[1:-1]
                cells[(i, i + k)] = tuple(Entry.parse(t) for t in tok.split(","))
        return cls(shape, cells)

    def to_json_dict(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "cells": [
                {"row": r, "col": c, "entries": [e.to_json_dict() for e in es]}
                for (r, c), es in sorted(self.cells.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, d: dict):
        cells = {(item["row"], item["col"]): tuple(Entry.from_json_dict(e) for e in item["entries"])
                 for item in d["cells"]}
        return cls(d["shape"], cells)


class WeakSetValuedShiftedTableau(SetValuedShiftedTableau):
    """Boxes hold nonempty multisets; repeats within a box are allowed."""

    __slots__ = ()

    _multiset = True


# ---------------------------------------------------------------------------
# unshifted tableaux (ordinary Young diagram shapes)

def as_partition(x) -> tuple[int, ...]:
    parts = tuple(_int(p, "part") for p in x)
    if any(p <= 0 for p in parts):
        raise ValidationError("parts must be positive")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValidationError("parts must weakly decrease")
    return parts


class IncreasingTableau:
    """Unshifted tableau with strictly increasing rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(_int(v, "entry") for v in r) for r in rows)
        for i, row in enumerate(rows):
            if not row or any(v <= 0 for v in row):
                raise ValidationError("rows must be nonempty with positive entries")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValidationError(f"row {i + 1} is not strictly increasing")
            if i:
                prev = rows[i - 1]
                if len(prev) < len(row):
                    raise ValidationError("row lengths must weakly decrease")
                if any(prev[k] >= v for k, v in enumerate(row)):
                    raise ValidationError(f"column through row {i + 1} not increasing")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry_set(self) -> set[int]:
        return set(chain.from_iterable(self.rows))

    def reading_word(self) -> Word:
        return tuple(chain.from_iterable(reversed(self.rows)))

    def __eq__(self, other):
        if not isinstance(other, IncreasingTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(("unshifted", self.rows))

    def __repr__(self):
        return f"IncreasingTableau({self.rows!r})"


class UnshiftedSetValuedTableau:
    """Set-valued filling of an ordinary Young diagram, unprimed entries.

    Boxes hold nonempty sets; the smallest member of a box is >= the largest
    member of the boxes to its left and above, and an integer occupies at
    most one box per column.
    """

    __slots__ = ("shape", "cells", "_key")

    def __init__(self, shape, cells):
        shape = as_partition(shape)
        cellmap = {}
        for cell, vals in dict(cells).items():
            r, c = cell
            vs = tuple(sorted(_int(v, "entry") for v in vals))
            cellmap[(int(r), int(c))] = vs
        region = {(i, j) for i, p in enumerate(shape, 1) for j in range(1, p + 1)}
        if set(cellmap) != region:
            raise ValidationError("cells do not match shape")
        col_used: set[tuple[int, int]] = set()
        for (r, c) in sorted(cellmap):
            vs = cellmap[(r, c)]
            if not vs or len(set(vs)) != len(vs) or vs[0] <= 0:
                raise ValidationError(f"box ({r},{c}) must hold a nonempty set of positive integers")
            for nb in ((r, c - 1), (r - 1, c)):
                if nb in cellmap and vs[0] < cellmap[nb][-1]:
                    raise ValidationError(f"box ({r},{c}) starts below its neighbor {nb}")
            for v in vs:
                if (c, v) in col_used:
                    raise ValidationError(f"{v} appears twice in column {c}")
                col_used.add((c, v))
        self.shape = shape
        self.cells = cellmap
        self._key = tuple(sorted(cellmap.items()))

    @property
    def total_entries(self) -> int:
        return sum(len(vs) for vs in self.cells.values())

    def __eq__(self, other):
        if not isinstance(other, UnshiftedSetValuedTableau):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"UnshiftedSetValuedTableau({self.shape!r}, {dict(self._key)!r})"


# ---------------------------------------------------------------------------
# generic helpers

def reading_word(obj) -> Word:
    """Reading word of a tableau-like object or bare cell map."""
    if hasattr(obj, "reading_word"):
        return obj.reading_word()
    return reading_word_of_cells(dict(obj))


def restrict(obj, interval):
    """Restrict a word or tableau to a letter interval.

    The interval is either an integer k, meaning [1, k], or a pair (lo, hi).
    """
    if isinstance(interval, int):
        lo, hi = 1, interval
    else:
        lo, hi = interval
    if isinstance(obj, ShiftedTableau):
        return obj.restrict(lo, hi)
    return restrict_word(obj, lo, hi)


# ---------------------------------------------------------------------------
# enumeration

def strict_partitions_bounded(max_part: int, max_rows: int):
    """All strict partitions with parts <= max_part and at most max_rows rows."""
    def rec(prefix, cap):
        yield tuple(prefix)
        if len(prefix) == max_rows:
            return
        for p in range(min(cap, max_part), 0, -1):
            prefix.append(p)
            yield from rec(prefix, p - 1)
            prefix.pop()

    yield from rec([], max_part)


def enumerate_increasing_shifted_tableaux(n: int) -> list[ShiftedTableau]:
    """All increasing shifted tableaux with entries in [n], canonically ordered.

    Rows and columns strictly increase, so no row or column exceeds n cells
    and every shape fits inside the staircase.
    """
    if n < 0:
        raise ValidationError("n must be >= 0")
    out = []
    for shape in strict_partitions_bounded(n, n):
        sp = StrictPartition(shape)
        cells = sp.cells()
        filling: dict[Cell, int] = {}

        def rec(idx: int):
            if idx == len(cells):
                out.append(ShiftedTableau(tuple(
                    tuple(filling[(i, j)] for j in range(i, i + p))
                    for i, p in enumerate(sp, 1))))
                return
            r, c = cells[idx]
            lo = 1
            if (r, c - 1) in filling:
                lo = max(lo, filling[(r, c - 1)] + 1)
            if (r - 1, c) in filling:
                lo = max(lo, filling[(r - 1, c)] + 1)
            for v in range(lo, n + 1):
                filling[(r, c)] = v
                rec(idx + 1)
                del filling[(r, c)]

        rec(0)
    out.sort(key=ShiftedTableau.sort_key)
    return out


def enumerate_standard_set_valued(shape, n: int) -> list[SetValuedShiftedTableau]:
    """All standard set-valued fillings of a shifted shape with labels 1..n.

    Labels are placed in increasing order.  A label may open a box only once
    the boxes to its left and above are occupied, and may join an occupied
    box only while the boxes to its right and below are still empty; both
    constraints restate the between-box monotonicity for distinct labels.
    """
    shape = as_strict_partition(shape)
    boxes = shape.cells()
    if n < len(boxes) or (n > 0 and not boxes):
        return []
    contents: dict[Cell, list[Entry]] = {b: [] for b in boxes}
    out = []

    def rec(k: int, empties: int):
        if k > n:
            if empties == 0:
                out.append(SetValuedShiftedTableau(shape, {b: tuple(es) for b, es in contents.items()}))
            return
        if n - k + 1 < empties:
            return
        for (r, c) in boxes:
            box = contents[(r, c)]
            if box:
                right = (r, c + 1)
                below = (r + 1, c)
                if (right in contents and contents[right]) or (below in contents and contents[below]):
                    continue
            else:
                left = (r, c - 1)
                above = (r - 1, c)
                if (left in contents and not contents[left]) or (above in contents and not contents[above]):
                    continue
            for primed in ((False,) if r == c else (False, True)):
                box.append(Entry(k, primed))
                rec(k + 1, empties - (len(box) == 1))
                box.pop()

    rec(1, len(boxes))
    out.sort(key=lambda t: t._key)
    return out
