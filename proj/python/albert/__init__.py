"""Octonion and Jordan-algebra arithmetic with constructive diagonalization
by explicit F4 generators, plus the split-algebra obstruction certificate."""

from ._core import (  # noqa: F401
    AlbertError,
    Algebra,
    DeltaA,
    DiagonalizationTranscript,
    GTwoAuto,
    Generator,
    InvariantDrift,
    JordanElement,
    MembershipReport,
    ObstructionVerdict,
    Octonion,
    Quaternion,
    RotO3,
    SelftestReport,
    SpThree,
    SuiteResult,
    Tolerances,
    Verdict,
    apply,
    apply_sequence,
    check_f4_membership,
    counterexample_X0,
    det,
    diagonalizability_obstruction,
    diagonalize,
    freudenthal_cross,
    frobenius_norm,
    g2_map_to_e1,
    inner_product,
    is_identity,
    jordan_from_json,
    jordan_product,
    jordan_to_json,
    random_jordan,
    run_selftest,
    sigma,
    trace,
    transcript_from_json,
    transcript_to_json,
    unit_E,
)
from ._core import __version__  # noqa: F401
