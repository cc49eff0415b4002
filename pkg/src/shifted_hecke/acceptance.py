"""Named verification suites re-deriving the package's headline results.

Every suite recomputes a documented fact from scratch and reports whether it
still holds, together with a one-line account of what was checked.  The
recorded values they compare against were produced independently (small
worked examples by hand, sweeps by exhaustive enumeration) and are frozen
here so that any behavioral drift fails loudly.

Suites are registered under a descriptive name plus a ``criterion-N`` alias
and carry a time budget; ``run_suite`` and ``run_all`` drive them, and the
``verify`` CLI subcommand is a thin wrapper over the same registry.
"""

from __future__ import annotations

from itertools import product
from time import perf_counter

from .core import (Entry, SetValuedShiftedTableau, ShiftedTableau, SkewTableau,
                   StrictPartition, ValidationError, as_strict_partition,
                   strict_partitions_bounded)
from .equivalence import equivalent_bounded, is_urt_bounded
from .insertion import (descent_set, descent_set_recording, insert_one,
                        insert_word, insertion_tableau, reverse_insert)
from .kjdt import (Marker, antidiagonal_tableau, kswitch, rectify,
                   viable_switch_sequences)
from .skpr import (class_product_urt, lr_coefficients, phi,
                   product_class_representatives, skew_fillings,
                   verify_product_identity)
from .symfun import (GP_poly, K_poly, K_poly_via_words, TruncatedPolynomial,
                     first_differing_coefficient, geometric_substitute,
                     is_symmetric)


class Suite:
    """A named check with a number, a time budget, and a zero-argument body."""

    __slots__ = ("name", "number", "budget", "func")

    def __init__(self, name, number, budget, func):
        self.name = name
        self.number = number
        self.budget = budget
        self.func = func

    def __repr__(self):
        return f"Suite({self.name!r}, number={self.number})"


class SuiteResult:
    __slots__ = ("name", "number", "ok", "detail", "seconds")

    def __init__(self, name, number, ok, detail, seconds):
        self.name = name
        self.number = number
        self.ok = ok
        self.detail = detail
        self.seconds = seconds

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} criterion-{self.number} {self.name} "
                f"[{self.seconds:.3f}s]: {self.detail}")

    def to_json_dict(self) -> dict:
        return {"name": self.name, "number": self.number, "ok": self.ok,
                "detail": self.detail, "seconds": self.seconds}

    def __repr__(self):
        return f"SuiteResult({self.name!r}, ok={self.ok})"


SUITES: dict[str, Suite] = {}
_ORDER: list[Suite] = []


def _register(number: int, name: str, budget, func):
    suite = Suite(name, number, budget, func)
    SUITES[name] = suite
    SUITES[f"criterion-{number}"] = suite
    _ORDER.append(suite)


def suite_names() -> tuple[str, ...]:
    """Canonical suite names in numeric order."""
    return tuple(s.name for s in _ORDER)


def run_suite(name: str) -> SuiteResult:
    """Run one suite by name (or ``criterion-N`` alias) and time it."""
    suite = SUITES.get(name)
    if suite is None:
        known = ", ".join(suite_names())
        raise ValidationError(f"unknown suite {name!r}; known suites: {known}")
    start = perf_counter()
    ok, detail = suite.func()
    seconds = perf_counter() - start
    if ok and suite.budget is not None and seconds >= suite.budget:
        ok = False
        detail += f"; took {seconds:.3f}s, over the {suite.budget:g}s budget"
    return SuiteResult(suite.name, suite.number, ok, detail, seconds)


def run_all() -> list[SuiteResult]:
    return [run_suite(s.name) for s in _ORDER]


# ---------------------------------------------------------------------------
# 1. insertion fidelity on the worked examples

_STEPS_2115432 = (
    ((2,),),
    ((1, 2),),
    ((1, 2),),
    ((1, 2, 5),),
    ((1, 2, 4), (5,)),
    ((1, 2, 3), (4, 5)),
    ((1, 2, 3, 5), (3, 4)),
)


def _check_insertion_fidelity():
    def derive():
        word = (2, 1, 1, 5, 4, 3, 2)
        steps = tuple(insertion_tableau(word[:k]).rows for k in range(1, 8))
        return steps, insert_word((4, 5, 1, 1, 3, 2))

    steps, (p, q) = derive()
    expected_q = SetValuedShiftedTableau((4, 1), {
        (1, 1): (Entry(1),),
        (1, 2): (Entry(2),),
        (1, 3): (Entry(3, True), Entry(4, True)),
        (1, 4): (Entry(6, True),),
        (2, 2): (Entry(5),),
    })
    if steps != _STEPS_2115432:
        return False, "the seven-step insertion of 2115432 drifted from the recorded tableaux"
    if p != ShiftedTableau(((1, 2, 4, 5), (3,))) or q != expected_q:
        return False, "the insertion pair of 451132 drifted from the recorded (P, Q)"
    best = None
    for _ in range(100):
        start = perf_counter()
        derive()
        elapsed = perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    if best >= 1e-3:
        return False, f"re-deriving both examples took {best * 1000:.3f} ms at best, over 1 ms"
    return True, ("the seven-step insertion of 2115432 and the (P, Q) pair of 451132 "
                  f"match the recorded values; best of 100 runs {best * 1000:.3f} ms")


# ---------------------------------------------------------------------------
# 2. insertion is a bijection onto (tableau, recording) pairs


def _check_insertion_bijection():
    seen: dict = {}
    count = 0
    for length in range(1, 6):
        for w in product((1, 2, 3), repeat=length):
            count += 1
            p, q = insert_word(w)
            other = seen.setdefault((p, q), w)
            if other != w:
                return False, f"words {other} and {w} insert to the same pair"
            if reverse_insert(p, q) != w:
                return False, f"reverse insertion does not recover {w}"
    return True, (f"all {count} words over [3] of length <= 5 insert to distinct pairs "
                  "and reverse insertion recovers each word")


# ---------------------------------------------------------------------------
# 3. word descents equal recording-tableau descents


def _check_descent_preservation():
    count = 0
    for length in range(1, 7):
        for w in product((1, 2, 3, 4), repeat=length):
            count += 1
            if descent_set(w) != descent_set_recording(insert_word(w)[1]):
                return False, f"descent sets disagree on {w}"
    return True, f"descents of the word and of its recording tableau agree on all {count} words over [4] of length <= 6"


# ---------------------------------------------------------------------------
# 4. rectification of the antidiagonal tableau replays insertion


def _check_rectification_vs_insertion():
    count = 0
    for letters, maxlen in (((1, 2, 3), 5), ((1, 2, 3, 4), 4)):
        for length in range(1, maxlen + 1):
            for w in product(letters, repeat=length):
                count += 1
                if rectify(antidiagonal_tableau(w), "superstandard") != insertion_tableau(w):
                    return False, f"rectification disagrees with insertion on {w}"
    skew = SkewTableau({(1, 5): 1, (2, 4): 2, (2, 5): 3, (3, 3): 1, (3, 4): 4},
                       outer=(5, 4, 2), inner=(4, 2))
    if rectify(skew, "superstandard") != ShiftedTableau(((1, 2, 3), (4,))):
        return False, "the worked five-box rectification no longer gives rows (1,2,3)/(4)"
    t = ShiftedTableau(((1, 2, 3, 4, 6), (4, 5, 6, 8), (6, 7)))
    board = {(1, 7): 5}
    for i, row in enumerate(t.rows, 1):
        for k, v in enumerate(row):
            board[(i + 1, i + 1 + k)] = v
    appended = SkewTableau(board, outer=(7, 5, 4, 2), inner=(6,))
    expected = ShiftedTableau(((1, 2, 3, 4, 5), (4, 5, 6, 8), (6, 7)))
    if insert_one(t, 5).tableau != expected:
        return False, "inserting 5 into the three-row example drifted from the recorded result"
    if rectify(appended, "superstandard") != expected:
        return False, "sliding 5 into the three-row example disagrees with inserting it"
    return True, (f"rectification matches insertion on {count} words and on the two "
                  "worked examples, including the appended-letter slide")


# ---------------------------------------------------------------------------
# 5. every viable switch sequence rectifies the same way


def _jdt_boards():
    """Skew boards with up to 3 inner boxes and values in [4].

    Inner shapes run over the strict partitions of size <= 3; outer shapes
    add between 1 and 3 boxes; fillings are all increasing fillings of the
    added region.  Inner boxes are replaced by markers, numbered row-major.
    """
    for mu_parts in ((1,), (2,), (3,), (2, 1)):
        mu = StrictPartition(mu_parts)
        for nu_parts in strict_partitions_bounded(mu.parts[0] + 3, len(mu.parts) + 2):
            nu = StrictPartition(nu_parts)
            if not nu.contains(mu) or not 1 <= nu.size - mu.size <= 3:
                continue
            for filling in skew_fillings(mu, nu, 1, 4):
                yield mu, filling


def _check_viable_independence():
    boards = 0
    replays = 0
    for mu, filling in _jdt_boards():
        board = dict(filling)
        for k, cell in enumerate(mu.cells(), 1):
            board[cell] = Marker(k)
        markers = mu.size
        values = max(filling.values())
        final = None
        for seq in viable_switch_sequences(markers, values):
            cur = board
            for m, v in seq:
                cur = kswitch(cur, Marker(m), v)
            if final is None:
                final = cur
            elif cur != final:
                return False, (f"switch sequences disagree on inner shape {mu.parts} "
                               f"with filling {sorted(filling.items())}")
            replays += 1
        boards += 1
        for i in range(1, markers + 1):
            for j in range(i + 1, markers + 1):
                for r in range(1, values + 1):
                    for s in range(1, values + 1):
                        if r == s:
                            continue
                        one = kswitch(kswitch(board, Marker(i), r), Marker(j), s)
                        two = kswitch(kswitch(board, Marker(j), s), Marker(i), r)
                        if one != two:
                            return False, (f"switches ({i},{r}) and ({j},{s}) do not commute "
                                           f"on inner shape {mu.parts}")
    return True, (f"{replays} sequence replays across {boards} boards all agree, and "
                  "switches with distinct markers and distinct values commute")


# ---------------------------------------------------------------------------
# 6. coefficients of K_(2,1)


def _check_k_coefficients():
    expected = {(2, 1, 0): 1, (1, 1, 1): 2, (2, 2, 0): 3, (2, 1, 1): 5, (1, 2, 1): 5}
    direct = K_poly((2, 1), 3, 4)
    via = K_poly_via_words(ShiftedTableau(((1, 2), (3,))), 3, 4)
    if direct != via:
        return False, "tableau enumeration and descent words give different K_(2,1)"
    for exp, coef in expected.items():
        if direct.coefficient(exp) != coef:
            return False, f"K_(2,1) has coefficient {direct.coefficient(exp)} at {exp}, expected {coef}"
    return True, ("K_(2,1) carries coefficients 1, 2, 3, 5, 5 at the five recorded "
                  "monomials, by tableau enumeration and by descent words alike")


# ---------------------------------------------------------------------------
# 7. symmetry of the generating functions

_SYMMETRY_SHAPES = ((1,), (2,), (2, 1), (3, 1))


def _check_symmetry():
    for shape in _SYMMETRY_SHAPES:
        if not is_symmetric(K_poly(shape, 3, 6)):
            return False, f"K polynomial of {shape} is not symmetric"
        if not is_symmetric(GP_poly(shape, 3, 6)):
            return False, f"GP polynomial of {shape} is not symmetric"
    return True, ("K and GP polynomials are symmetric for shapes (1), (2), (2,1), (3,1) "
                  "at 3 variables, degree 6")


# ---------------------------------------------------------------------------
# 8. the geometric substitution carries GP onto K


def _check_geometric_substitution():
    for shape in _SYMMETRY_SHAPES:
        size = as_strict_partition(shape).size
        image = geometric_substitute(GP_poly(shape, 3, 5)).scale((-1) ** size)
        if image != K_poly(shape, 3, 5):
            diff = first_differing_coefficient(image, K_poly(shape, 3, 5))
            return False, f"substitution image of GP_{shape} differs from K at {diff}"
    return True, ("substituting x -> -x/(1-x) into GP and fixing the sign recovers K "
                  "for shapes (1), (2), (2,1), (3,1) at degree 5")


# ---------------------------------------------------------------------------
# 9. K functions are not spanned by the shifted-semistandard basis


def _check_schur_p_witness():
    quadratic = K_poly((1,), 3, 2).component(2)
    semistandard = K_poly((2,), 3, 2).component(2)
    exps = sorted(set(quadratic.terms) | set(semistandard.terms))
    proportional = all(
        quadratic.coefficient(e) * semistandard.coefficient(f)
        == quadratic.coefficient(f) * semistandard.coefficient(e)
        for e in exps for f in exps)
    diff = first_differing_coefficient(quadratic, semistandard)
    if proportional:
        return False, "the degree-2 part of K_(1) became proportional to that of K_(2)"
    if diff != ((0, 1, 1), 1, 2):
        return False, f"the first differing coefficient moved to {diff}"
    return True, ("the degree-2 part of K_(1) is not proportional to the "
                  "shifted-semistandard polynomial of (2): at x2*x3 they carry 1 and 2")


# ---------------------------------------------------------------------------
# 10. equivalent words with different insertion tableaux


def _check_non_urt_witness():
    u, v = (1, 2, 4, 5, 3), (1, 2, 4, 5, 3, 3)
    result = equivalent_bounded(u, v)
    if result.equivalent is not True:
        return False, f"equivalence of 12453 and 124533 not certified: {result.reason}"
    tu, tv = insertion_tableau(u), insertion_tableau(v)
    if tu.rows != ((1, 2, 3, 5), (4,)) or tv.rows != ((1, 2, 3, 5), (4, 5)):
        return False, "the insertion tableaux of 12453 and 124533 drifted"
    verdict, witness = is_urt_bounded(tu)
    if verdict is not False or witness != tv:
        return False, f"bounded URT search returned ({verdict}, {witness})"
    return True, ("12453 and 124533 are equivalent with a replayed certificate yet insert "
                  "to different tableaux, and the bounded URT check finds that witness")


# ---------------------------------------------------------------------------
# 11. product classes of small unique rectification targets

_SEVEN_PRODUCT_ROWS = (
    ((1, 2, 3), (4,)),
    ((1, 2, 4), (3,)),
    ((1, 2, 3), (3, 4)),
    ((1, 2, 3, 4),),
    ((1, 2, 3, 4), (3,)),
    ((1, 2, 3, 4), (4,)),
    ((1, 2, 3, 4), (3, 4)),
)


def _check_product_classes():
    t12 = insertion_tableau((1, 2))
    seven = class_product_urt(t12, t12)
    if tuple(t.rows for t in seven) != _SEVEN_PRODUCT_ROWS:
        return False, f"[[12]]*[[12]] produced {len(seven)} tableaux instead of the recorded seven"
    reps = product_class_representatives(t12, insertion_tableau((1,)))
    if set(reps) != {(1, 2, 3), (3, 1, 2), (3, 1, 2, 3)}:
        return False, f"[[12]]*[[1]] decomposed into {reps}"
    return True, ("[[12]]*[[12]] yields exactly the seven recorded tableaux and "
                  "[[12]]*[[1]] decomposes into the classes of 123, 312, 3123")


# ---------------------------------------------------------------------------
# 12. structure coefficients against the polynomial oracle

_LR_CASES = (
    ((1,), (1,), {(2,): 1}),
    ((1,), (2,), {(2, 1): 1, (3,): 1, (3, 1): 1}),
    ((2, 1), (1,), {(3, 1): 1}),
    ((2,), (2, 1), {(3, 2): 1, (4, 1): 1, (4, 2): 1}),
)


def _check_lr_oracle():
    for lam, mu, expected in _LR_CASES:
        report = verify_product_identity(lam, mu, 3, 6)
        if not report.matches:
            return False, (f"expansion of K_{lam} * K_{mu} fails, first difference "
                           f"{report.first_difference}")
        table = {nu.parts: c for nu, c in report.table.sorted_items()}
        if table != expected:
            return False, f"coefficient table of {lam} * {mu} changed to {table}"
    pairs = tuple((lam, mu) for lam, mu, _ in _LR_CASES) + (((1,), (3, 1)),)
    for lam, mu in pairs:
        if lr_coefficients(lam, mu, kind="minimal") != lr_coefficients(lam, mu, kind="superstandard"):
            return False, f"coefficients of {lam} * {mu} depend on the rectification target"
    return True, ("the four recorded products expand correctly at 3 variables, degree 6, "
                  "and swapping minimal and superstandard targets never changes a table")


# ---------------------------------------------------------------------------
# 13. the class-to-polynomial map is multiplicative


def _check_phi_homomorphism():
    words = ((1,), (1, 2), (1, 2, 1))
    for h1 in words:
        for h2 in words:
            lhs = phi(h1, 3, 5) * phi(h2, 3, 5)
            rhs = TruncatedPolynomial.zero(3, 5)
            for t in class_product_urt(insertion_tableau(h1), insertion_tableau(h2)):
                rhs = rhs + K_poly(t.shape, 3, 5)
            if lhs != rhs:
                return False, f"the class map is not multiplicative on {h1} and {h2}"
    return True, ("the class map sends products of the classes of 1, 12, 121 to products "
                  "of K polynomials at 3 variables, degree 5")


_register(1, "insertion-fidelity", None, _check_insertion_fidelity)
_register(2, "insertion-bijection", 1.0, _check_insertion_bijection)
_register(3, "descent-preservation", 10.0, _check_descent_preservation)
_register(4, "rectification-vs-insertion", 30.0, _check_rectification_vs_insertion)
_register(5, "viable-sequence-independence", 30.0, _check_viable_independence)
_register(6, "weak-grothendieck-coefficients", 5.0, _check_k_coefficients)
_register(7, "symmetry", 60.0, _check_symmetry)
_register(8, "geometric-substitution", 60.0, _check_geometric_substitution)
_register(9, "schur-p-witness", 1.0, _check_schur_p_witness)
_register(10, "non-urt-witness", 5.0, _check_non_urt_witness)
_register(11, "product-classes", 5.0, _check_product_classes)
_register(12, "lr-oracle", 300.0, _check_lr_oracle)
_register(13, "phi-homomorphism", 60.0, _check_phi_homomorphism)
