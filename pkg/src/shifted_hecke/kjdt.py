"""K-theoretic jeu de taquin on shifted skew shapes.

Boards map cells to labels: tableau values (ints), markers occupying the
inner shape, or the hole symbol used by single slides.  The basic move is a
simultaneous switch of two labels a and b: every a-box with a b-neighbor
becomes b and every b-box with an a-neighbor becomes a, at the same time.
Unlike classical jeu de taquin this can split one label across several boxes
or merge several into one, which is where the K-theory lives.

Rectifying a skew tableau fills its inner shape with markers, switches each
marker in turn through the values 1..q, and strips the markers; any switch
sequence compatible with the natural partial order gives the same result.
"""

from __future__ import annotations

from .core import (
    Cell,
    ShiftedTableau,
    SkewTableau,
    StrictPartition,
    ValidationError,
    as_strict_partition,
    as_word,
    cells_to_tableau,
)


class Marker:
    """A label occupying one box of the inner shape during rectification."""

    __slots__ = ("index",)

    def __init__(self, index: int):
        if not isinstance(index, int) or index < 1:
            raise ValidationError("marker indices start at 1")
        self.index = index

    def __eq__(self, other):
        if not isinstance(other, Marker):
            return NotImplemented
        return self.index == other.index

    def __hash__(self):
        return hash(("marker", self.index))

    def __repr__(self):
        return f"Marker({self.index})"


class _Hole:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "HOLE"


HOLE = _Hole()

Label = "int | Marker | _Hole"


def _adjacent(cell: Cell):
    r, c = cell
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def kswitch(board: dict, a, b) -> dict:
    """Switch labels a and b everywhere at once.

    Every a-box with a b-neighbor is relabeled b, and every b-box with an
    a-neighbor is relabeled a, simultaneously; boxes with no neighbor of the
    other label keep their labels.
    """
    if a == b:
        raise ValidationError("switch needs two distinct labels")
    a_cells = [c for c, l in board.items() if l == a]
    b_cells = {c for c, l in board.items() if l == b}
    if not a_cells or not b_cells:
        return dict(board)
    out = dict(board)
    a_set = set(a_cells)
    for c in a_cells:
        if any(n in b_cells for n in _adjacent(c)):
            out[c] = b
    for c in b_cells:
        if any(n in a_set for n in _adjacent(c)):
            out[c] = a
    return out


def increasing_violations(board: dict):
    """Pairs of adjacent value cells that fail to increase east or south.

    Only integer labels are compared; holes and markers are skipped.  Used
    as a diagnostic after each full slide, where the value-labeled subboard
    is expected to be an increasing filling.
    """
    bad = []
    for (r, c), label in board.items():
        if not isinstance(label, int):
            continue
        for nb in ((r, c + 1), (r + 1, c)):
            other = board.get(nb)
            if isinstance(other, int) and other <= label:
                bad.append(((r, c), nb))
    return bad


def _place_holes(board: dict, cells, forward: bool) -> dict:
    out = dict(board)
    placed = set()
    for cell in cells:
        r, c = cell
        cell = (int(r), int(c))
        label = out.get(cell)
        if label is not None and label is not HOLE:
            raise ValidationError(f"cell {cell} already holds {label!r}")
        out[cell] = HOLE
        placed.add(cell)
    if forward:
        holes = {c for c, l in out.items() if l is HOLE}
        for (r, c) in sorted(holes):
            for nb in ((r, c + 1), (r + 1, c)):
                if nb in holes:
                    raise ValidationError(
                        f"holes at ({r},{c}) and {nb} touch; starting cells of a "
                        "forward slide must be maximal boxes of the inner shape")
    return out


def slide(board: dict, cells, forward: bool = True) -> dict:
    """Slide the values of a board past holes placed at the given cells.

    The cells become holes (they must not hold values or markers), then the
    holes are switched with each integer value present, in increasing order
    for a forward slide and decreasing for a reverse slide.  Holes stay on
    the board at their final positions.  Starting cells of a forward slide
    may not touch each other on the east or south, as the maximal boxes of
    an inner shape never do.
    """
    board = _place_holes(board, cells, forward)
    values = sorted({l for l in board.values() if isinstance(l, int)})
    if not forward:
        values.reverse()
    for v in values:
        board = kswitch(board, HOLE, v)
    bad = increasing_violations(board)
    if bad:
        raise ValidationError(f"slide broke the increasing filling at {bad[0]}")
    return board


# ---------------------------------------------------------------------------
# switch sequences

def standard_switch_sequence(markers: int, values: int):
    """Largest marker first, each swept through the values in order."""
    return tuple((m, v) for m in range(markers, 0, -1) for v in range(1, values + 1))


def validate_switch_sequence(sequence, markers: int, values: int):
    """Check that a sequence of (marker, value) switches is viable.

    Viable means: every pair in [markers] x [values] appears exactly once,
    each marker meets the values in increasing order, and for each value the
    markers appear in decreasing order.  Raises with the violated clause.
    """
    seq = [(int(m), int(v)) for m, v in sequence]
    expected = {(m, v) for m in range(1, markers + 1) for v in range(1, values + 1)}
    if len(seq) != len(expected) or set(seq) != expected:
        raise ValidationError(
            f"sequence must use each of {markers} x {values} switches exactly once")
    position = {pair: i for i, pair in enumerate(seq)}
    for m in range(1, markers + 1):
        for v in range(1, values):
            if position[(m, v)] > position[(m, v + 1)]:
                raise ValidationError(
                    f"marker {m} meets value {v + 1} before value {v}")
    for v in range(1, values + 1):
        for m in range(1, markers):
            if position[(m + 1, v)] > position[(m, v)]:
                raise ValidationError(
                    f"value {v} meets marker {m} before marker {m + 1}")
    return tuple(seq)


def viable_switch_sequences(markers: int, values: int):
    """All viable switch sequences, i.e. linear extensions of the grid order."""
    elements = [(m, v) for m in range(1, markers + 1) for v in range(1, values + 1)]
    out = []
    placed = set()
    seq = []

    def ready(pair):
        m, v = pair
        if v > 1 and (m, v - 1) not in placed:
            return False
        if m < markers and (m + 1, v) not in placed:
            return False
        return True

    def rec():
        if len(seq) == len(elements):
            out.append(tuple(seq))
            return
        for pair in elements:
            if pair not in placed and ready(pair):
                placed.add(pair)
                seq.append(pair)
                rec()
                seq.pop()
                placed.remove(pair)

    rec()
    return out


# ---------------------------------------------------------------------------
# rectification

def _is_pair_of_ints(x) -> bool:
    return (isinstance(x, (tuple, list)) and len(x) == 2
            and all(isinstance(i, int) and not isinstance(i, bool) for i in x))


def rectify(skew, order) -> ShiftedTableau:
    """Rectify a shifted skew tableau under an explicitly chosen order.

    Different orders may rectify differently, so one is always required:

    - "superstandard": the inner shape is filled with markers numbered row
      by row and the switch sequence sweeps the largest marker through
      values 1..q, then the next, down to marker 1.
    - a sequence of (marker, value) pairs: an explicit switch sequence,
      validated for viability against the same marker and value counts.
    - a sequence of cell collections: iterated forward slides; each
      collection becomes the holes of one slide, and the holes are removed
      once the slide finishes.

    The result must come out as an increasing tableau of straight shifted
    shape.
    """
    if not isinstance(skew, SkewTableau):
        skew = SkewTableau(skew)
    if not isinstance(order, str):
        order = list(order)
        if order and not all(_is_pair_of_ints(p) for p in order):
            return _rectify_by_slides(skew, order)
    return _rectify_by_markers(skew, order)


def _rectify_by_markers(skew: SkewTableau, order) -> ShiftedTableau:
    if skew.outer is None:
        raise ValidationError(
            "skew shape is ambiguous; construct the tableau with explicit shapes")
    inner_cells = skew.inner.cells()
    board: dict[Cell, object] = dict(skew.cells)
    for idx, cell in enumerate(inner_cells, 1):
        board[cell] = Marker(idx)
    markers = len(inner_cells)
    values = max(skew.cells.values(), default=0)
    contiguous_sweeps = isinstance(order, str)
    if contiguous_sweeps:
        if order != "superstandard":
            raise ValidationError(f"unknown rectification order {order!r}")
        sequence = standard_switch_sequence(markers, values)
    else:
        sequence = validate_switch_sequence(order, markers, values)
    for i, (m, v) in enumerate(sequence):
        board = kswitch(board, Marker(m), v)
        if contiguous_sweeps and v == values:
            bad = increasing_violations(board)
            if bad:
                raise ValidationError(
                    f"sweep of marker {m} broke the increasing filling at {bad[0]}")
    remaining = {c: l for c, l in board.items() if isinstance(l, int)}
    result = cells_to_tableau(remaining)
    if not isinstance(result, ShiftedTableau):
        raise ValidationError("switch sequence left a non-straight shape behind")
    return result


def _rectify_by_slides(skew: SkewTableau, slide_cells) -> ShiftedTableau:
    board: dict[Cell, object] = dict(skew.cells)
    for cells in slide_cells:
        board = slide(board, cells, forward=True)
        board = {c: l for c, l in board.items() if l is not HOLE}
    result = cells_to_tableau(board)
    if not isinstance(result, ShiftedTableau):
        raise ValidationError("the slides did not reach a straight shape")
    return result


def antidiagonal_tableau(word) -> SkewTableau:
    """The word laid out along an antidiagonal, last letter on top.

    Letter w_k sits at cell (n - k + 1, n + k - 1), so no two letters share
    a row or column and rectification replays insertion of the word.
    """
    w = as_word(word)
    n = len(w)
    if n == 0:
        return SkewTableau({}, outer=(), inner=())
    cells = {(n - k + 1, n + k - 1): x for k, x in enumerate(w, 1)}
    outer = StrictPartition(range(2 * n - 1, 0, -2))
    inner = StrictPartition(range(2 * n - 2, 1, -2))
    return SkewTableau(cells, outer=outer, inner=inner)


# ---------------------------------------------------------------------------
# board serialization

def label_to_json(label) -> object:
    if label is HOLE:
        return "hole"
    if isinstance(label, Marker):
        return {"marker": label.index}
    return {"v": int(label)}


def label_from_json(obj) -> object:
    if obj == "hole":
        return HOLE
    if "marker" in obj:
        return Marker(obj["marker"])
    return int(obj["v"])


def board_to_json_dict(board: dict) -> dict:
    return {
        "cells": [
            {"row": r, "col": c, "label": label_to_json(l)}
            for (r, c), l in sorted(board.items(), key=lambda kv: kv[0])
        ]
    }


def board_from_json_dict(d: dict) -> dict:
    return {(item["row"], item["col"]): label_from_json(item["label"])
            for item in d["cells"]}
