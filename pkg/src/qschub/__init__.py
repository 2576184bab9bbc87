"""Exact quantum and classical Schubert polynomial calculator.

The package computes classical and quantum Schubert polynomials, quantum
Schur-type functions, and the quantization map on exact integer arithmetic,
and ships the identity suites that check every determinantal formula,
factorization, counterexample, and conjecture instance at desk scale.
"""

from ._kernels import KERNEL
from .classical import (
    complete_sym,
    double_schubert,
    elem_sym,
    flagged_schur,
    schubert,
    schubert_expand,
    schur,
)
from .errors import QschubError
from .perms import (
    as_text,
    code,
    enumerate_class,
    from_code,
    from_text,
    permutations,
    shape,
)
from .poly import A, ONE, Poly, Q, X, Y, ZERO, a, determinant, parse, q, x, y
from .quantum import (
    coeff_window,
    delta,
    q_bjs,
    q_complete,
    q_double_schubert,
    q_dominant_double,
    q_elementary,
    q_factorial_schur,
    q_flagged,
    q_grassmannian_double,
    q_monomial,
    q_rv_double,
    q_schubert,
    q_schur,
    q_w0_double,
    q_xy_complete,
    q_xy_elementary,
    quantize,
    stable_approx,
)
from .verify import Report, exit_ok, run_all

__version__ = "1.0.0"

__all__ = [
    "A",
    "KERNEL",
    "ONE",
    "Poly",
    "Q",
    "QschubError",
    "Report",
    "X",
    "Y",
    "ZERO",
    "__version__",
    "a",
    "as_text",
    "code",
    "coeff_window",
    "complete_sym",
    "delta",
    "determinant",
    "double_schubert",
    "elem_sym",
    "enumerate_class",
    "exit_ok",
    "flagged_schur",
    "from_code",
    "from_text",
    "parse",
    "permutations",
    "q",
    "q_bjs",
    "q_complete",
    "q_double_schubert",
    "q_dominant_double",
    "q_elementary",
    "q_factorial_schur",
    "q_flagged",
    "q_grassmannian_double",
    "q_monomial",
    "q_rv_double",
    "q_schubert",
    "q_schur",
    "q_w0_double",
    "q_xy_complete",
    "q_xy_elementary",
    "quantize",
    "run_all",
    "schubert",
    "schubert_expand",
    "schur",
    "shape",
    "stable_approx",
    "x",
    "y",
]
