"""Single-valued branches of many-valued analytic functions.

Evaluation of the named branches, analytic continuation of w**2 = g(z) and
exp(u) = g(z) along polygonal paths, parity probes on slit domains, and the
contour quadrature used by the verification suite.
"""

from ._core import (
    AmbiguityError,
    ConsistencyError,
    DomainError,
    Error,
    GeometryError,
    IoError,
    NumericError,
    SingularityError,
    StepError,
    UsageError,
    bessel_j0_quadrature,
    bessel_j0_series,
    continue_log,
    continue_sqrt,
    crack_integral,
    estimate_order,
    eval_cos_sqrt,
    eval_f1,
    eval_f2,
    eval_f3,
    eval_log_sin,
    eval_log_z2,
    evaluate_branch,
    joukowski,
    joukowski_inverse_disk,
    monodromy_of_loop,
    parity_probe,
    run_suite,
)

__all__ = [
    "AmbiguityError",
    "ConsistencyError",
    "DomainError",
    "Error",
    "GeometryError",
    "IoError",
    "NumericError",
    "SingularityError",
    "StepError",
    "UsageError",
    "bessel_j0_quadrature",
    "bessel_j0_series",
    "continue_log",
    "continue_sqrt",
    "crack_integral",
    "estimate_order",
    "eval_cos_sqrt",
    "eval_f1",
    "eval_f2",
    "eval_f3",
    "eval_log_sin",
    "eval_log_z2",
    "evaluate_branch",
    "joukowski",
    "joukowski_inverse_disk",
    "monodromy_of_loop",
    "parity_probe",
    "run_suite",
]
