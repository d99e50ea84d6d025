"""Exact Ooguri-Vafa invariants of C^3 with a framed brane, Kac polynomials
of quivers, and the Rogers-Ramanujan product identities they feed into."""

from .algebra import IntLaurent, RationalFn, adams_subst, eval_at_one, qpoch, ratfn_arith, to_laurent
from .errors import (
    BadConstantTerm,
    CapExceeded,
    DivisionByZero,
    IncompleteExponents,
    IndexOutOfRange,
    IntegralityViolation,
    InvalidTau,
    MathViolation,
    MismatchAt,
    NonIntegerResult,
    NotLaurent,
    NotPrime,
    ParityViolation,
    QuiverFormatError,
    SignViolation,
    SupportViolation,
    TruncationTooTight,
)
from .ov import (
    OVTable,
    disk_gw,
    divisibility_checks,
    f_at_one,
    fp_function,
    marino_vafa,
    ov_f_mu,
    ov_table,
    product_verify,
    z_series,
)
from .partitions import Partition, enumerate_partitions, mn_character, stats
from .plethysm import PSeries, TSeries, XSeries, pleth_exp, pleth_log, schur_pairing, specialize_single
from .quiver import KacTable, Quiver, betti_extract, hlrv_special_check, hua_kac, leg_quiver_dim, partition_pairing
from .rr import GPoly, classical_rr_check, deformed_product_check, g_poly, g_table, rr_exponents, rr_verify, support_set

__version__ = "0.1.0"
