"""quandlelab: finite quandles, their cyclic-type classification, and
complex representations, built on exact finite-field arithmetic."""

from .fields import (
    FieldSpec,
    FieldTable,
    build_field,
    build_field_q,
    discrete_log,
    primitive_elements,
)
from .quandles import (
    Quandle,
    alexander,
    check_axioms,
    conj_quandle,
    core_quandle,
    dihedral,
    find_isomorphism,
    inner_group,
    is_cyclic_type,
    orbits,
    trivial,
)
from .presentation import (
    CanonicalForm,
    Word,
    classify_cyclic,
    normalize,
    parse_word,
    prime_power_equivalent,
    verify_presentation,
)
from .reps import (
    Decomposition,
    QuandleRep,
    Subspace,
    augmentation_split,
    check_rep,
    decompose,
    invariant_complement_exists,
    is_irreducible,
    regular_rep,
)
from .dihedral_reps import IrrepLabel, dihedral_closed_form, matrix_forms
from .cyclic_reps import (
    JordanSpec,
    analyze_2d_pair,
    common_eigenvector_2x2,
    constant_rep_decompose,
    kth_power_maximal,
    rigidity_check,
)
from .counterexamples import maschke_counterexample, orbit_rep, s3_hom_demo
from .polysys import log_involution, system_has_no_solution

__all__ = [
    "FieldSpec", "FieldTable", "build_field", "build_field_q",
    "discrete_log", "primitive_elements",
    "Quandle", "alexander", "check_axioms", "conj_quandle", "core_quandle",
    "dihedral", "find_isomorphism", "inner_group", "is_cyclic_type",
    "orbits", "trivial",
    "CanonicalForm", "Word", "classify_cyclic", "normalize", "parse_word",
    "prime_power_equivalent", "verify_presentation",
    "Decomposition", "QuandleRep", "Subspace", "augmentation_split",
    "check_rep", "decompose", "invariant_complement_exists", "is_irreducible",
    "regular_rep",
    "IrrepLabel", "dihedral_closed_form", "matrix_forms",
    "JordanSpec", "analyze_2d_pair", "common_eigenvector_2x2",
    "constant_rep_decompose", "kth_power_maximal", "rigidity_check",
    "maschke_counterexample", "orbit_rep", "s3_hom_demo",
    "log_involution", "system_has_no_solution",
]
