"""Quantum polynomials: generating factors, worked values, degenerations,
determinants, quantization, and stable approximants."""

from __future__ import annotations

import pytest

from qschub import classical, perms, quantum
from qschub.errors import (
    CompositionOutOfBox,
    ForeignVariables,
    RankMismatch,
    ShapeOutOfBox,
)
from qschub.poly import ONE, Poly, Q, X, Y, ZERO, parse, q, x, y


def _nokill(n):
    return {(Q, i): 0 for i in range(1, n)}


def test_generating_factors():
    assert quantum.q_elementary(0, 3) == ONE
    assert quantum.q_elementary(1, 1) == x(1)
    assert quantum.q_elementary(2, 2) == parse("x1*x2 + q1")
    assert quantum.q_elementary(3, 3) == parse("x1*x2*x3 + q1*x3 + q2*x1")
    assert quantum.q_elementary(4, 3) == ZERO
    assert quantum.q_elementary(1, 0) == ZERO
    assert quantum.q_complete(0, 0) == ONE
    assert quantum.q_complete(1, 0) == ZERO
    assert quantum.q_complete(1, 2) == x(1) + x(2)
    assert quantum.q_complete(2, 2) == parse("x1^2 + x1*x2 + x2^2 - q1 - q2")
    # delta factors: Delta_k(t | X_k) = sum_i e~_i(X_k) t^{k-i}
    t = y(1)
    assert quantum.delta(2, t) == parse("x1*x2 + q1 + (x1 + x2)*y1 + y1^2")


def test_degeneration_to_classical_factors():
    for r in range(0, 5):
        for k in range(0, 6):
            assert quantum.q_elementary(k, r).subs(_nokill(6)) == classical.elem_sym(k, r)
            assert quantum.q_complete(k, r).subs(_nokill(6)) == classical.complete_sym(k, r)


S3_QUANTUM = {
    (1, 2, 3): "1",
    (1, 3, 2): "x1 + x2",
    (2, 1, 3): "x1",
    (2, 3, 1): "x1*x2 + q1",
    (3, 1, 2): "x1^2 - q1",
    (3, 2, 1): "x1^2*x2 + q1*x1",
}

# the worked rank-5 example: S~ for w = 13524
W13524 = (
    "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 2*x1*x2*x3"
    " + q1*(x1 + x2) + q2*(x2 + x3) - q3*(x1 + x2)"
)


def test_s3_quantum_table():
    for w, s in S3_QUANTUM.items():
        assert quantum.q_schubert(w) == parse(s)


def test_worked_rank5_value():
    assert quantum.q_schubert((1, 3, 5, 2, 4)) == parse(W13524)


def test_top_cell_product():
    # S~_{w_0} is the product of the e~_i(X_i)
    for n in (2, 3, 4):
        prod = ONE
        for i in range(1, n):
            prod = prod * quantum.q_elementary(i, i)
        assert quantum.q_schubert(perms.longest(n)) == prod


def test_rank_embedding_consistency():
    # computing w inside a larger rank and killing the extra q's agrees
    w = (2, 3, 1)
    big = quantum.q_schubert(perms.right_pad(w, 1), 4)
    assert big.subs({(Q, 3): 0}) == quantum.q_schubert(w).subs({(Q, 3): 0})
    with pytest.raises(RankMismatch):
        quantum.q_schubert((2, 3, 1), 2)


def test_classical_degeneration_s4():
    kill = _nokill(5)
    for w in perms.permutations(4):
        assert quantum.q_schubert(w).subs(kill) == classical.schubert(w)
        assert quantum.q_double_schubert(w, 4).subs(kill) == classical.double_schubert(w)


def test_double_specializes_to_single():
    ykill = {(Y, i): 0 for i in range(1, 5)}
    for w in perms.permutations(4):
        assert quantum.q_double_schubert(w, 4).subs(ykill) == quantum.q_schubert(w)


def test_q_schur_box_guard():
    with pytest.raises(ShapeOutOfBox):
        quantum.q_schur((3,), 2, 4)
    assert quantum.q_schur((2, 2), 2, 4) == parse(
        "x1^2*x2^2 - q2*x1^2 + 2*q1*x1*x2 + q1^2 + q1*q2"
    )
    assert quantum.q_schur((), 2, 4) == ONE


def test_q_monomial():
    assert quantum.q_monomial((1,), 2) == x(1)
    assert quantum.q_monomial((2, 0), 3) == parse("x1^2 - q1")
    assert quantum.q_monomial((0, 0), 3) == ONE
    with pytest.raises(CompositionOutOfBox):
        quantum.q_monomial((3,), 3)
    with pytest.raises(CompositionOutOfBox):
        quantum.q_monomial((0, 0, 0, 1), 3)


def test_quantize():
    assert quantum.quantize(parse("x1^2"), 3) == parse("x1^2 - q1")
    assert quantum.quantize(ONE, 3) == ONE
    assert quantum.quantize(ZERO, 3) == ZERO
    # additivity
    f, g = parse("x1*x2"), parse("x1^2")
    assert quantum.quantize(f + g, 3) == quantum.quantize(f, 3) + quantum.quantize(g, 3)
    with pytest.raises(ForeignVariables):
        quantum.quantize(parse("y1"), 3)


def test_quantize_routes_agree():
    # Schubert-basis substitution vs monomial-determinant substitution
    for w in perms.permutations(4):
        f = classical.schubert(w)
        assert quantum.quantize_monomial_route(f, 4) == quantum.quantize(f, 4)


def test_quantize_of_schubert_is_quantum_schubert():
    for w in perms.permutations(4):
        assert quantum.quantize(classical.schubert(w), 4) == quantum.q_schubert(w)


def test_q_partial_counterexample_pair():
    f = quantum.q_schubert((4, 2, 5, 1, 3))
    assert f.q_partial(3) == -quantum.q_schubert((4, 2, 1, 3, 5))


def test_stable_approx():
    for w in ((2, 1), (1, 3, 2), (3, 2, 1)):
        assert quantum.stable_approx(w, 0) == quantum.q_schubert(w)
    # the two-row determinant for w = 321 at every order m <= 4
    for m in range(0, 5):
        det = quantum.q_complete(2, m + 1) * quantum.q_complete(1, m + 2) - quantum.q_complete(
            3, m + 1
        )
        assert quantum.stable_approx((3, 2, 1), m) == det


STABLE_321_WINDOW = (
    "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2"
    " + q1*x1 + q1*x2 + q2*x2 + q2*x3 + q3*x3"
)


def test_stable_window_stabilizes():
    w3 = quantum.coeff_window(quantum.stable_approx((3, 2, 1), 3), 3, 3)
    w4 = quantum.coeff_window(quantum.stable_approx((3, 2, 1), 4), 3, 3)
    assert w3 == w4 == parse(STABLE_321_WINDOW)


def test_coeff_window():
    p = parse("x1*x4 + q1*x1 + q5 + x2")
    assert quantum.coeff_window(p, 3, 3) == parse("q1*x1 + x2")
    assert quantum.coeff_window(p, 4, 4) == parse("x1*x4 + q1*x1 + x2")


def test_q_factorial_schur_degenerations():
    p = quantum.q_factorial_schur((2, 2), 2, 4)
    # y = 0 gives the quantum Schur polynomial
    assert p.subs({(Y, i): 0 for i in range(1, 4)}) == quantum.q_schur((2, 2), 2, 4)
    # q = 0 and y = 0 gives the classical Schur polynomial
    both = dict(_nokill(4))
    both.update({(Y, i): 0 for i in range(1, 4)})
    assert p.subs(both) == classical.schur((2, 2), 2)


def test_elementary_override_hook():
    corrupted = parse("x1*x2 - q1")

    def hook(k, r):
        if (k, r) == (2, 2):
            return corrupted
        return None

    quantum.set_elementary_override(hook)
    try:
        quantum.clear_caches()
        assert quantum.q_elementary(2, 2) == corrupted
        # the corruption propagates into everything built from the factors
        assert quantum.q_schubert((2, 3, 1)) == parse("x1*x2 - q1")
    finally:
        quantum.set_elementary_override(None)
        quantum.clear_caches()
    assert quantum.q_elementary(2, 2) == parse("x1*x2 + q1")
    assert quantum.q_schubert((2, 3, 1)) == parse("x1*x2 + q1")


def test_flagged_determinants():
    # a row-flagged determinant with full flags equals the quantum Schur
    assert quantum.q_flagged((2, 1), kind="row", xflags=(3, 3)) == parse(
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 2*x1*x2*x3"
        " + q1*(x1 + x2) + q2*(x2 + x3) + q3*(x3 + x4)"
    )
    # skew shapes divide out correctly: outer == inner gives 1
    assert quantum.q_flagged((1,), (1,), kind="row", xflags=(2,)) == ONE


def test_xy_factors_degenerate():
    # Y with zero variables is the plain factor
    assert quantum.q_xy_elementary(2, 2, 0) == quantum.q_elementary(2, 2)
    assert quantum.q_xy_complete(2, 2, 0) == quantum.q_complete(2, 2)
