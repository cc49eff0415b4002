"""Row-and-column insertion for words into increasing shifted tableaux.

Inserting a word letter by letter produces an increasing shifted tableau P
together with a standard set-valued recording tableau Q of the same shape.
Each letter follows a path of row insertions, switching once to column
insertions if it bumps an entry off the main diagonal, and ends either by
creating a new box or by marking an existing box; the recording entry is
primed exactly when the path ended in column mode or ended by a failed
insertion into an empty row.
"""

from __future__ import annotations

from bisect import bisect_right

from .core import (
    Cell,
    Entry,
    SetValuedShiftedTableau,
    ShiftedTableau,
    ValidationError,
    Word,
    as_word,
)


class InsertionOutcome:
    """Result of inserting one letter: the new tableau and how the path ended."""

    __slots__ = ("tableau", "terminal", "primed", "new_box")

    def __init__(self, tableau: ShiftedTableau, terminal: Cell, primed: bool, new_box: bool):
        self.tableau = tableau
        self.terminal = terminal
        self.primed = primed
        self.new_box = new_box

    def __repr__(self):
        return (f"InsertionOutcome(terminal={self.terminal}, primed={self.primed}, "
                f"new_box={self.new_box})")


def _column_bottom(rows, start: int, c: int) -> int:
    """Largest row index b >= start whose row contains column c."""
    b = start
    while b < len(rows) and b + 1 <= c <= b + len(rows[b]):
        b += 1
    return b


def _insert(rows, x: int):
    """Insert x into rows (list of lists, mutated in place).

    Returns (terminal cell, primed, new_box).
    """
    row_mode = True
    idx = 1
    while True:
        if row_mode:
            r = idx
            if r > len(rows):
                # empty row: the only candidate box is the diagonal (r, r)
                if r == 1 or (len(rows[r - 2]) >= 2 and rows[r - 2][1] < x):
                    rows.append([x])
                    return (r, r), False, True
                prev = rows[r - 2]
                return (r - 1, r - 2 + len(prev)), True, False
            row = rows[r - 1]
            if x >= row[-1]:
                L = len(row)
                ok = x > row[-1] and (
                    r == 1 or (len(rows[r - 2]) >= L + 2 and rows[r - 2][L + 1] < x))
                if ok:
                    row.append(x)
                    return (r, r + L), False, True
                c = r + L - 1
                return (_column_bottom(rows, r, c), c), False, False
            k = bisect_right(row, x)
            y = row[k]
            left_ok = k == 0 or row[k - 1] < x
            above_ok = r == 1 or rows[r - 2][k + 1] < x
            if left_ok and above_ok:
                row[k] = x
            if k == 0:
                row_mode = False
            idx = r + 1
            x = y
        else:
            c = idx
            if c > len(rows[0]):
                # empty column: the only candidate box extends the first row
                if len(rows[0]) == c - 1 and rows[0][-1] < x:
                    rows[0].append(x)
                    return (1, c), True, True
                return (1, len(rows[0])), True, False
            b = _column_bottom(rows, 1, c)
            vb = rows[b - 1][c - b]
            if x >= vb:
                if b == len(rows):
                    ok = c == b + 1 and x > vb
                else:
                    ok = b + 1 + len(rows[b]) == c and rows[b][-1] < x and vb < x
                if ok:
                    if b == len(rows):
                        rows.append([x])
                    else:
                        rows[b].append(x)
                    return (b + 1, c), True, True
                return (b, b - 1 + len(rows[b - 1])), True, False
            ry = 1
            while rows[ry - 1][c - ry] <= x:
                ry += 1
            y = rows[ry - 1][c - ry]
            left_ok = c - 1 < ry or rows[ry - 1][c - 1 - ry] < x
            above_ok = ry == 1 or rows[ry - 2][c - ry + 1] < x
            if left_ok and above_ok:
                rows[ry - 1][c - ry] = x
            idx = c + 1
            x = y


def _as_rows(tableau) -> list[list[int]]:
    if isinstance(tableau, ShiftedTableau):
        return [list(r) for r in tableau.rows]
    return [list(r) for r in ShiftedTableau(tableau).rows]


def insert_one(tableau, x: int) -> InsertionOutcome:
    """Insert a single letter into an increasing shifted tableau."""
    if x <= 0:
        raise ValidationError(f"letters must be positive, got {x}")
    rows = _as_rows(tableau)
    terminal, primed, new_box = _insert(rows, x)
    return InsertionOutcome(ShiftedTableau(tuple(tuple(r) for r in rows)),
                            terminal, primed, new_box)


def insert_word(word) -> tuple[ShiftedTableau, SetValuedShiftedTableau]:
    """Insert a word letter by letter; return (insertion, recording) tableaux."""
    w = as_word(word)
    rows: list[list[int]] = []
    qcells: dict[Cell, list[Entry]] = {}
    for k, x in enumerate(w, 1):
        terminal, primed, new_box = _insert(rows, x)
        if new_box:
            qcells[terminal] = [Entry(k, primed)]
        else:
            qcells[terminal].append(Entry(k, primed))
    p = ShiftedTableau(tuple(tuple(r) for r in rows))
    q = SetValuedShiftedTableau(p.shape, {c: tuple(es) for c, es in qcells.items()})
    return p, q


def insertion_tableau(word) -> ShiftedTableau:
    """The insertion tableau alone, skipping recording bookkeeping."""
    rows: list[list[int]] = []
    for x in as_word(word):
        _insert(rows, x)
    return ShiftedTableau(tuple(tuple(r) for r in rows))


def reverse_insert(p: ShiftedTableau, q: SetValuedShiftedTableau) -> Word:
    """The unique word whose insertion yields the pair (p, q).

    The recording tableau pins down, for every step, which box the insertion
    path must end in, whether it must end primed, and whether it must create
    the box.  A depth-first search over candidate letters, pruned by those
    three outcomes, recovers the word; failure to match p at the end means
    the pair is not in the image of insertion.
    """
    if not isinstance(p, ShiftedTableau):
        p = ShiftedTableau(p)
    if p.shape != q.shape:
        raise ValidationError("insertion and recording tableaux have different shapes")
    positions = q.label_positions()
    n = len(positions)
    first_label = {}
    for k in sorted(positions):
        first_label.setdefault(positions[k][0], k)
    max_letter = max(p.entry_set(), default=0)
    target = [list(r) for r in p.rows]

    def search(rows, k):
        if k > n:
            return () if rows == target else None
        cell, primed = positions[k]
        must_create = first_label[cell] == k
        for x in range(1, max_letter + 1):
            trial = [list(r) for r in rows]
            terminal, pr, new_box = _insert(trial, x)
            if terminal == cell and pr == primed and new_box == must_create:
                rest = search(trial, k + 1)
                if rest is not None:
                    return (x,) + rest
        return None

    word = search([], 1)
    if word is None:
        raise ValidationError("no word inserts to this tableau pair")
    return word


def descent_set(word) -> set[int]:
    """Positions i with w_i > w_{i+1}, 1-indexed."""
    w = as_word(word)
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def weak_descent_set(word) -> set[int]:
    """Positions i with w_i >= w_{i+1}, 1-indexed.

    This is the convention for unshifted Hecke words: a repeated letter must
    still pick up a strictly larger variable, because a box of a set-valued
    tableau cannot hold the same value twice.
    """
    w = as_word(word)
    return {i for i in range(1, len(w)) if w[i - 1] >= w[i]}


def descent_set_recording(q: SetValuedShiftedTableau) -> set[int]:
    """Descents of a standard recording tableau.

    i is a descent when i is unprimed and i+1 primed; when both are unprimed
    with i+1 strictly lower; or when both are primed in distinct boxes with
    i+1 weakly higher.  A primed i followed by an unprimed i+1 never is.
    """
    positions = q.label_positions()
    out = set()
    for i in range(1, len(positions)):
        (c1, p1), (c2, p2) = positions[i], positions[i + 1]
        if not p1 and not p2:
            if c2[0] > c1[0]:
                out.add(i)
        elif not p1 and p2:
            out.add(i)
        elif p1 and p2:
            if c1 != c2 and c1[0] >= c2[0]:
                out.add(i)
    return out


# ---------------------------------------------------------------------------
# unshifted Hecke insertion

def _hecke_insert_row(rows, x: int):
    """Insert x into an unshifted increasing tableau (list of lists)."""
    r = 1
    while True:
        if r > len(rows):
            if r == 1 or rows[r - 2][0] < x:
                rows.append([x])
            return
        row = rows[r - 1]
        if x >= row[-1]:
            L = len(row)
            if x > row[-1] and (r == 1 or (len(rows[r - 2]) >= L + 1 and rows[r - 2][L] < x)):
                row.append(x)
            return
        k = bisect_right(row, x)
        y = row[k]
        left_ok = k == 0 or row[k - 1] < x
        above_ok = r == 1 or rows[r - 2][k] < x
        if left_ok and above_ok:
            row[k] = x
        x = y
        r += 1


def hecke_insertion_tableau(word):
    """Unshifted Hecke insertion tableau of a word.

    Returns the increasing tableau together with its (ordinary partition)
    shape.  Letters equal to an existing row end, or whose placement would
    break strict increase, leave the row unchanged while still bumping.
    """
    from .core import IncreasingTableau

    rows: list[list[int]] = []
    for x in as_word(word):
        _hecke_insert_row(rows, x)
    t = IncreasingTableau(tuple(tuple(r) for r in rows))
    return t, t.shape
