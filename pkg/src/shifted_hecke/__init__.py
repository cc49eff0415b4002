"""Shifted Hecke insertion and the K-theory of the orthogonal Grassmannian.

The package implements, over plain integers and exactly:

- shifted Hecke insertion of words into increasing shifted tableaux, with
  set-valued recording tableaux and the reverse bijection (``insertion``);
- weak K-Knuth equivalence of words, decided by bounded bidirectional search
  with replayable certificates, and unique rectification targets
  (``equivalence``);
- the K-theoretic switch, jeu de taquin slides, and rectification of skew
  tableaux along viable switch sequences (``kjdt``);
- weak shifted stable Grothendieck polynomials and their relatives as
  truncated polynomials, via tableau enumeration and via descent words
  (``symfun``);
- the ring of equivalence-class sums, its product, and the resulting
  Littlewood-Richardson rule, cross-checked against polynomial arithmetic
  (``skpr``);
- named verification suites re-deriving the recorded examples and sweeps
  (``acceptance``), exposed on the command line as ``shifted-hecke``
  (``cli``).
"""

from .core import (
    Entry,
    IncreasingTableau,
    SetValuedShiftedTableau,
    ShiftedTableau,
    SkewTableau,
    StrictPartition,
    UnshiftedSetValuedTableau,
    ValidationError,
    WeakSetValuedShiftedTableau,
    as_strict_partition,
    as_word,
    cells_to_tableau,
    enumerate_increasing_shifted_tableaux,
    enumerate_standard_set_valued,
    format_word,
    parse_word,
    reading_word,
    reading_word_of_cells,
    strict_partitions_bounded,
)
from .insertion import (
    InsertionOutcome,
    descent_set,
    descent_set_recording,
    hecke_insertion_tableau,
    insert_one,
    insert_word,
    insertion_tableau,
    reverse_insert,
    weak_descent_set,
)
from .equivalence import (
    Certificate,
    EquivalenceResult,
    RewriteStep,
    bounded_class,
    equivalent_bounded,
    is_urt_bounded,
    minimal_tableau,
    neighbors,
    reading_word_tableau,
    superstandard_tableau,
    urt_by_construction,
    urt_tableau,
)
from .kjdt import (
    HOLE,
    Marker,
    antidiagonal_tableau,
    kswitch,
    rectify,
    slide,
    standard_switch_sequence,
    validate_switch_sequence,
    viable_switch_sequences,
)
from .symfun import (
    DecompositionReport,
    G_poly,
    G_poly_via_words,
    GP_poly,
    K_poly,
    K_poly_via_words,
    TruncatedPolynomial,
    first_differing_coefficient,
    fqs,
    geometric_substitute,
    grothendieck_decomposition,
    is_symmetric,
    relabel,
    set_valued_tableaux,
    standardize,
    unshifted_set_valued_tableaux,
    weak_set_valued_tableaux,
)
from .skpr import (
    LRTable,
    ProductReport,
    WordClass,
    class_product_urt,
    lr_coefficients,
    phi,
    product_class_representatives,
    shift_word,
    shuffle,
    skew_fillings,
    verify_product_identity,
    word_class,
)
from .acceptance import run_all, run_suite, suite_names

__version__ = "1.0.0"

__all__ = [
    "Entry",
    "IncreasingTableau",
    "SetValuedShiftedTableau",
    "ShiftedTableau",
    "SkewTableau",
    "StrictPartition",
    "UnshiftedSetValuedTableau",
    "ValidationError",
    "WeakSetValuedShiftedTableau",
    "as_strict_partition",
    "as_word",
    "cells_to_tableau",
    "enumerate_increasing_shifted_tableaux",
    "enumerate_standard_set_valued",
    "format_word",
    "parse_word",
    "reading_word",
    "reading_word_of_cells",
    "strict_partitions_bounded",
    "InsertionOutcome",
    "descent_set",
    "descent_set_recording",
    "hecke_insertion_tableau",
    "insert_one",
    "insert_word",
    "insertion_tableau",
    "reverse_insert",
    "weak_descent_set",
    "Certificate",
    "EquivalenceResult",
    "RewriteStep",
    "bounded_class",
    "equivalent_bounded",
    "is_urt_bounded",
    "minimal_tableau",
    "neighbors",
    "reading_word_tableau",
    "superstandard_tableau",
    "urt_by_construction",
    "urt_tableau",
    "HOLE",
    "Marker",
    "antidiagonal_tableau",
    "kswitch",
    "rectify",
    "slide",
    "standard_switch_sequence",
    "validate_switch_sequence",
    "viable_switch_sequences",
    "DecompositionReport",
    "G_poly",
    "G_poly_via_words",
    "GP_poly",
    "K_poly",
    "K_poly_via_words",
    "TruncatedPolynomial",
    "first_differing_coefficient",
    "fqs",
    "geometric_substitute",
    "grothendieck_decomposition",
    "is_symmetric",
    "relabel",
    "set_valued_tableaux",
    "standardize",
    "unshifted_set_valued_tableaux",
    "weak_set_valued_tableaux",
    "LRTable",
    "ProductReport",
    "WordClass",
    "class_product_urt",
    "lr_coefficients",
    "phi",
    "product_class_representatives",
    "shift_word",
    "shuffle",
    "skew_fillings",
    "verify_product_identity",
    "word_class",
    "run_all",
    "run_suite",
    "suite_names",
    "__version__",
]
