"""Word rewriting: K-Knuth moves, bounded equivalence search, and unique
rectification targets.

Two words are K-Knuth equivalent when one can be turned into the other by
local moves: doubling or collapsing a repeated letter, the braid move
xyx <-> yxy, and two strict Knuth moves on three-letter windows.  The weak
variant adds a swap of the first two letters of the word.  Equivalence of
words is undecidable-looking in the small (classes are infinite because of
doubling), so searches are bounded in word length and state count and report
three-way verdicts.
"""

from __future__ import annotations

from collections import deque

from .core import ShiftedTableau, ValidationError, Word, as_word
from .insertion import insertion_tableau

WEAK_RULES = (1, 2, 3, 4, 5)
PLAIN_RULES = (1, 2, 3, 4)


class RewriteStep:
    """One rewrite: rule number, 1-based window position, direction."""

    __slots__ = ("rule", "pos", "forward")

    def __init__(self, rule: int, pos: int, forward: bool):
        if rule not in WEAK_RULES:
            raise ValidationError(f"unknown rule {rule}")
        if pos < 1:
            raise ValidationError("positions are 1-based")
        self.rule = rule
        self.pos = pos
        self.forward = bool(forward)

    def inverse(self) -> "RewriteStep":
        return RewriteStep(self.rule, self.pos, not self.forward)

    def __eq__(self, other):
        if not isinstance(other, RewriteStep):
            return NotImplemented
        return (self.rule, self.pos, self.forward) == (other.rule, other.pos, other.forward)

    def __hash__(self):
        return hash((self.rule, self.pos, self.forward))

    def __repr__(self):
        arrow = "->" if self.forward else "<-"
        return f"RewriteStep(rule {self.rule} at {self.pos} {arrow})"

    def to_json_dict(self) -> dict:
        return {"rule": self.rule, "pos": self.pos, "forward": self.forward}

    @classmethod
    def from_json_dict(cls, d: dict) -> "RewriteStep":
        return cls(d["rule"], d["pos"], d["forward"])


def apply_step(word, step: RewriteStep) -> Word:
    """Apply one rewrite step, raising if it does not match the word."""
    w = as_word(word)
    p = step.pos - 1
    rule, fwd = step.rule, step.forward
    if rule == 1:
        if fwd:
            if p + 1 >= len(w) or w[p] != w[p + 1]:
                raise ValidationError(f"rule 1 needs a repeated letter at {step.pos}")
            return w[:p] + w[p + 1:]
        if p >= len(w):
            raise ValidationError(f"rule 1 position {step.pos} out of range")
        return w[:p] + (w[p],) + w[p:]
    if rule == 5:
        if p != 0 or len(w) < 2:
            raise ValidationError("rule 5 swaps the first two letters")
        a, b = w[0], w[1]
        if a == b or (a < b) != fwd:
            raise ValidationError("rule 5 direction does not match the word")
        return (b, a) + w[2:]
    if p + 2 >= len(w):
        raise ValidationError(f"rule {rule} window at {step.pos} out of range")
    a, b, c = w[p], w[p + 1], w[p + 2]
    if rule == 2:
        if a != c or a == b or (a < b) != fwd:
            raise ValidationError("rule 2 needs an xyx window matching the direction")
        return w[:p] + (b, a, b) + w[p + 3:]
    if rule == 3:
        if not ((b < a < c) if fwd else (c < a < b)):
            raise ValidationError("rule 3 window does not match the direction")
        return w[:p] + (a, c, b) + w[p + 3:]
    # rule 4
    if not ((a < c < b) if fwd else (b < c < a)):
        raise ValidationError("rule 4 window does not match the direction")
    return w[:p] + (b, a, c) + w[p + 3:]


def neighbors(word, weak: bool = True, max_len: int | None = None):
    """All one-step rewrites of a word as (new word, step) pairs."""
    w = as_word(word)
    n = len(w)
    out = []
    for p in range(n - 1):
        if w[p] == w[p + 1]:
            out.append((w[:p] + w[p + 1:], RewriteStep(1, p + 1, True)))
    if max_len is None or n + 1 <= max_len:
        for p in range(n):
            out.append((w[:p] + (w[p],) + w[p:], RewriteStep(1, p + 1, False)))
    for p in range(n - 2):
        a, b, c = w[p], w[p + 1], w[p + 2]
        if a == c and a != b:
            out.append((w[:p] + (b, a, b) + w[p + 3:], RewriteStep(2, p + 1, a < b)))
        if b < a < c:
            out.append((w[:p] + (a, c, b) + w[p + 3:], RewriteStep(3, p + 1, True)))
        elif c < a < b:
            out.append((w[:p] + (a, c, b) + w[p + 3:], RewriteStep(3, p + 1, False)))
        if a < c < b:
            out.append((w[:p] + (b, a, c) + w[p + 3:], RewriteStep(4, p + 1, True)))
        elif b < c < a:
            out.append((w[:p] + (b, a, c) + w[p + 3:], RewriteStep(4, p + 1, False)))
    if weak and n >= 2 and w[0] != w[1]:
        out.append(((w[1], w[0]) + w[2:], RewriteStep(5, 1, w[0] < w[1])))
    return out


class Certificate:
    """A replayable chain of rewrite steps from one word to another."""

    __slots__ = ("source", "target", "steps")

    def __init__(self, source, target, steps):
        self.source = as_word(source)
        self.target = as_word(target)
        self.steps = tuple(steps)

    def replay(self) -> Word:
        """Apply the steps to the source; raises unless the target emerges."""
        w = self.source
        for step in self.steps:
            w = apply_step(w, step)
        if w != self.target:
            raise ValidationError("certificate does not reach its target")
        return w

    def words(self) -> list[Word]:
        """Every intermediate word, source first, target last."""
        out = [self.source]
        for step in self.steps:
            out.append(apply_step(out[-1], step))
        return out

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return f"Certificate({self.source!r} -> {self.target!r}, {len(self.steps)} steps)"

    def to_json_dict(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "steps": [s.to_json_dict() for s in self.steps],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Certificate":
        return cls(d["source"], d["target"],
                   [RewriteStep.from_json_dict(s) for s in d["steps"]])


class EquivalenceResult:
    """Outcome of a bounded equivalence search.

    equivalent is True with a certificate, False with a reason, or None when
    the search exhausted its budget without deciding.
    """

    __slots__ = ("equivalent", "certificate", "reason", "states_explored",
                 "max_len", "max_states", "defaulted_bounds")

    def __init__(self, equivalent, certificate, reason, states_explored,
                 max_len, max_states, defaulted_bounds):
        self.equivalent = equivalent
        self.certificate = certificate
        self.reason = reason
        self.states_explored = states_explored
        self.max_len = max_len
        self.max_states = max_states
        self.defaulted_bounds = defaulted_bounds

    def __bool__(self):
        return self.equivalent is True

    def __repr__(self):
        return (f"EquivalenceResult(equivalent={self.equivalent}, "
                f"reason={self.reason!r}, states={self.states_explored})")


def _bfs_meet(u: Word, v: Word, weak: bool, max_len: int, max_states: int):
    """Bidirectional breadth-first search; returns (meet, parents_u, parents_v,
    states) where parents map word -> (previous word, step), or meet None."""
    if u == v:
        return u, {u: None}, {v: None}, 1
    sides = ({u: None}, {v: None})
    frontiers = (deque([u]), deque([v]))
    states = 2
    while frontiers[0] and frontiers[1]:
        i = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = sides[i], sides[1 - i]
        frontier = frontiers[i]
        for _ in range(len(frontier)):
            w = frontier.popleft()
            for nxt, step in neighbors(w, weak=weak, max_len=max_len):
                if nxt in mine:
                    continue
                mine[nxt] = (w, step)
                states += 1
                if nxt in other:
                    return nxt, sides[0], sides[1], states
                if states >= max_states:
                    return None, sides[0], sides[1], states
                frontier.append(nxt)
    return None, sides[0], sides[1], states


def _chain(parents, word):
    """Steps leading from the search root to word, in application order."""
    steps = []
    while parents[word] is not None:
        prev, step = parents[word]
        steps.append(step)
        word = prev
    steps.reverse()
    return steps


def equivalent_bounded(u, v, weak: bool = True, max_len: int | None = None,
                       max_states: int | None = None) -> EquivalenceResult:
    """Decide weak (or plain) K-Knuth equivalence within search bounds.

    Every rewrite preserves the set of letters used, so words with different
    supports are inequivalent outright.  When the insertion tableaux differ
    and one of them is a unique rectification target by construction, the
    words are inequivalent regardless of bounds.  Otherwise a bidirectional
    search over words of length up to max_len runs until it meets, exhausts
    the reachable set, or hits max_states.
    """
    u, v = as_word(u), as_word(v)
    defaulted = max_len is None or max_states is None
    if max_len is None:
        max_len = max(len(u), len(v)) + 3
    if max_states is None:
        max_states = 10 ** 6
    if max_len < max(len(u), len(v)):
        raise ValidationError("max_len is shorter than the input words")
    if set(u) != set(v):
        return EquivalenceResult(False, None, "different letter supports", 0,
                                 max_len, max_states, defaulted)
    tu, tv = insertion_tableau(u), insertion_tableau(v)
    if tu != tv and (urt_by_construction(tu) or urt_by_construction(tv)):
        return EquivalenceResult(
            False, None,
            "insertion tableaux differ and one is a unique rectification target",
            0, max_len, max_states, defaulted)
    meet, pu, pv, states = _bfs_meet(u, v, weak, max_len, max_states)
    if meet is not None:
        steps = _chain(pu, meet) + [s.inverse() for s in reversed(_chain(pv, meet))]
        cert = Certificate(u, v, steps)
        cert.replay()
        return EquivalenceResult(True, cert, "certificate found", states,
                                 max_len, max_states, defaulted)
    if states >= max_states:
        return EquivalenceResult(None, None, "state budget exhausted", states,
                                 max_len, max_states, defaulted)
    return EquivalenceResult(None, None,
                             f"components disjoint for words up to length {max_len}",
                             states, max_len, max_states, defaulted)


def bounded_class(word, weak: bool = True, max_len: int | None = None,
                  max_states: int | None = None):
    """All words reachable from word within the bounds, plus a truncation flag.

    Returns (frozenset of words, truncated) where truncated means the state
    budget cut the exploration short.
    """
    w = as_word(word)
    if max_len is None:
        max_len = len(w) + 3
    if max_states is None:
        max_states = 10 ** 6
    if max_len < len(w):
        raise ValidationError("max_len is shorter than the word")
    seen = {w}
    queue = deque([w])
    truncated = False
    while queue:
        cur = queue.popleft()
        for nxt, _ in neighbors(cur, weak=weak, max_len=max_len):
            if nxt in seen:
                continue
            if len(seen) >= max_states:
                truncated = True
                queue.clear()
                break
            seen.add(nxt)
            queue.append(nxt)
    return frozenset(seen), truncated


# ---------------------------------------------------------------------------
# unique rectification targets

def minimal_tableau(shape) -> ShiftedTableau:
    """Smallest increasing filling of a shifted shape: each entry is one more
    than the larger of its west and north neighbors."""
    from .core import as_strict_partition

    shape = as_strict_partition(shape)
    rows = []
    for i, p in enumerate(shape, 1):
        row = []
        for j in range(i, i + p):
            above = rows[i - 2][j - i + 1] if i > 1 else 0
            left = row[-1] if row else 0
            row.append(max(above, left) + 1)
        rows.append(row)
    return ShiftedTableau(tuple(tuple(r) for r in rows))


def superstandard_tableau(shape) -> ShiftedTableau:
    """Row-by-row consecutive filling: 1..p1, then p1+1..p1+p2, and so on."""
    from .core import as_strict_partition

    shape = as_strict_partition(shape)
    rows = []
    start = 1
    for p in shape:
        rows.append(tuple(range(start, start + p)))
        start += p
    return ShiftedTableau(tuple(rows))


def urt_tableau(kind: str, shape) -> ShiftedTableau:
    """A unique rectification target of the given shape, by construction."""
    if kind == "minimal":
        return minimal_tableau(shape)
    if kind == "superstandard":
        return superstandard_tableau(shape)
    raise ValidationError(f"unknown tableau kind {kind!r}")


def urt_by_construction(tableau: ShiftedTableau) -> bool:
    """Whether a tableau is a minimal or superstandard filling, up to adding
    a constant to every entry.  Rewrites and insertion commute with such
    shifts, so shifted copies inherit the unique rectification property."""
    if not isinstance(tableau, ShiftedTableau):
        tableau = ShiftedTableau(tableau)
    if not tableau.rows:
        return True
    base = tableau.shift(1 - min(tableau.entry_set()))
    shape = base.shape
    return base == minimal_tableau(shape) or base == superstandard_tableau(shape)


def reading_word_tableau(word) -> ShiftedTableau | None:
    """The increasing shifted tableau with this reading word, if one exists.

    In a reading word the rows appear bottom-up as maximal increasing runs
    (the last entry of a lower row always exceeds the first entry of the row
    above it), so the split is forced.
    """
    w = as_word(word)
    if not w:
        return ShiftedTableau(())
    runs = [[w[0]]]
    for x in w[1:]:
        if x > runs[-1][-1]:
            runs[-1].append(x)
        else:
            runs.append([x])
    runs.reverse()
    try:
        return ShiftedTableau(tuple(tuple(r) for r in runs))
    except ValidationError:
        return None


def is_urt_bounded(tableau: ShiftedTableau, weak: bool = True,
                   max_len: int | None = None, max_states: int | None = None):
    """Search the equivalence class of the reading word for a second tableau.

    Returns (verdict, witness): (False, other_tableau) when some equivalent
    word is the reading word of a different increasing shifted tableau;
    (True, None) when the bounded class holds no such word and was explored
    in full; (None, None) when the budget ran out first.
    """
    if not isinstance(tableau, ShiftedTableau):
        tableau = ShiftedTableau(tableau)
    words, truncated = bounded_class(tableau.reading_word(), weak=weak,
                                     max_len=max_len, max_states=max_states)
    for w in sorted(words):
        other = reading_word_tableau(w)
        if other is not None and other != tableau:
            return False, other
    if truncated:
        return None, None
    return True, None
