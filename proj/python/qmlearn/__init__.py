"""Exact classical and quantum learners for multilinear polynomials over F_q."""

from ._core import (
    FieldCtx,
    HiddenOracle,
    LearnReport,
    MultilinearPoly,
    QmlearnError,
    classical_learn,
    classical_query_count,
    learn_top_degree,
    lower_bound_report,
    qft_matrix,
    quantum_learn,
    quantum_learn_linear,
    quantum_query_count,
    verify_counting,
    verify_kickback,
    verify_lemma_fs,
)

__all__ = [
    "FieldCtx",
    "HiddenOracle",
    "LearnReport",
    "MultilinearPoly",
    "QmlearnError",
    "classical_learn",
    "classical_query_count",
    "learn_top_degree",
    "lower_bound_report",
    "qft_matrix",
    "quantum_learn",
    "quantum_learn_linear",
    "quantum_query_count",
    "verify_counting",
    "verify_kickback",
    "verify_lemma_fs",
]
