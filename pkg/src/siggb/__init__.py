"""Signature-based Groebner basis engine with oracle, certificates, and
criterion diagnostics."""

from .polyring import (
    Cmp,
    DomainError,
    MonomialOrder,
    ParseError,
    PolyRing,
    Polynomial,
    PrimeField,
    QQ,
    StructureError,
    compare,
    lcm_term,
    reduce_full,
    reduced_basis,
    spol,
    top_reduce,
)
from .signature import (
    LabeledPoly,
    Signature,
    SignatureCollisionError,
    sig_compare,
    sig_mul,
    spol_labeled,
)
from .syzygy import (
    Certificate,
    CertificateError,
    ModuleVector,
    TRepresentation,
    check_t_representation,
    certify_rejection,
    evaluate,
    mht,
    principal_syzygy,
)
from .f5engine import (
    BasisState,
    CriticalPair,
    EngineError,
    EngineOptions,
    RewriteRule,
    certify_all,
    incremental_basis,
    interreduce,
    is_normalized,
    is_rewritable,
    top_reduction_signed,
)
from .baseline import buchberger_basis, ideal_equal
from .falsifier import completely_normalized, scan_run

__all__ = [name for name in dir() if not name.startswith("_")]
