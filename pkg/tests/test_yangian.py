from fractions import Fraction

import pytest
from conftest import walgebra

from rectw.foundation import Scalar
from rectw.vertex import State, nth_product
from rectw.yangian import (
    ModeAction,
    ModeExpression,
    YangianData,
    apply_expression,
    ev_check,
    ev_parameters,
    phi_check,
)


def _fails(yc, rels):
    return [c.id for c in yc.verify_all(rels, "t").failures()]


# -- Cartan data ------------------------------------------------------------


def test_cartan_matrix_entries():
    yd = YangianData(3, 2, 1, 1)
    assert yd.a(3, 3) == 0  # boundary between the even and odd blocks
    assert yd.a(1, 1) == 2 and yd.a(4, 4) == -2
    assert yd.a(0, yd.N - 1) == 1 and yd.a(yd.N - 1, 0) == 1
    assert yd.a(1, 2) == -1 and yd.a(3, 4) == 1
    assert yd.odd_nodes() == (0, 3)


def test_cartan_matrix_non_super():
    yd = YangianData(3, 0, 1, 1)
    assert [[yd.a(i, j) for j in range(3)] for i in range(3)] == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert yd.odd_nodes() == ()


def test_m_matrix_readings():
    yd = YangianData(3, 2, 1, 1)
    assert yd.mm(yd.N - 1, 0) == 1 and yd.mm(0, yd.N - 1) == -1
    # adopted: m_{i,i+1} = -(-1)^{p(i+1)}, m_{i,i-1} = (-1)^{p(i)}
    assert yd.mm(1, 2) == -1 and yd.mm(3, 4) == 1 and yd.mm(4, 3) == -1
    printed = YangianData(3, 2, 1, 1, mm_reading="printed")
    assert printed.mm(1, 2) == 1
    with pytest.raises(ValueError):
        YangianData(3, 2, 1, 1, mm_reading="other")


def test_psi_shift_values():
    yd, _ = ev_parameters(3, 2, sample=(2, 1))
    assert yd.psi_shift(0) == Scalar()
    # (i - 2 (i - m)) / 2 with i = 4, m = 3
    assert yd.linear_coeff(4) == 1
    assert yd.psi_shift(4) == Scalar.const(1)
    assert yd.linear_coeff(2) == 1 and yd.linear_coeff(1) == Fraction(1, 2)


def test_ev_parameters():
    yd, ct = ev_parameters(3, 2)
    assert yd.hbar == Scalar.const(-1)
    assert ct == Scalar.alpha()
    yd, ct = ev_parameters(3, 2, sample=(1, 1))
    assert ct == Scalar.const(Fraction(-1, 2))


# -- mode expressions ----------------------------------------------------------


def test_apply_expression_is_linear_and_matches_products(wa212):
    states = {"a": wa212.W(1, 1, 2), "b": wa212.W(2, 3, 3)}
    act = ModeAction(wa212.va, states)
    v = wa212.prod(wa212.e(1, 1), wa212.e(4, 4))
    ea = ModeExpression.mode("a", 0)
    eb = ModeExpression.mode("b", 1)
    assert apply_expression(act, ea, v) == nth_product(states["a"], 0, v)
    two = ea * 2 + eb * Scalar.alpha()
    want = nth_product(states["a"], 0, v) * 2 + nth_product(states["b"], 1, v) * Scalar.alpha()
    assert apply_expression(act, two, v) == want
    comp = ea.compose(eb)
    assert apply_expression(act, comp, v) == nth_product(states["a"], 0, nth_product(states["b"], 1, v))


def test_series_truncates_on_bounded_states(wa212):
    states = {"a": wa212.W(1, 1, 1), "b": wa212.W(1, 2, 2)}
    act = ModeAction(wa212.va, states)
    v = wa212.e(1, 1)
    # sum_s a t^(-1-s) b t^(s): only s = 0, 1 reach v
    got = apply_expression(act, ModeExpression.series([("a", -1, -1), ("b", 0, 1)]), v)
    want = State(wa212.va)
    for s in range(0, 3):
        want = want + nth_product(states["a"], -1 - s, nth_product(states["b"], s, v))
    assert got == want


def test_summed_terms_need_right_slope():
    with pytest.raises(ValueError):
        ModeExpression.series([("a", 0, 1), ("b", 0, 0)])


# -- Phi at D = 1 (the D = 2 runs live in the acceptance suite) ----------------


@pytest.fixture(scope="module")
def wa302c():
    return walgebra(3, 0, 2, c_zero=True)


def test_phi_adopted_readings_pass(wa302c):
    yc = phi_check(wa302c, 1)
    assert not _fails(yc, yc.prop())
    assert not _fails(yc, yc.theorem())


@pytest.mark.parametrize("readings", [{"x01": "printed"}, {"xp01": "printed"}])
def test_phi_printed_images_fail(wa302c, readings):
    yc = phi_check(wa302c, 1, **readings)
    assert _fails(yc, yc.prop())


def test_phi_printed_boundary_relation_fails(wa302c):
    yc = phi_check(wa302c, 1)
    assert _fails(yc, yc.prop(eq29="printed"))


def test_phi_printed_m_matrix_fails(wa302c):
    yc = phi_check(wa302c, 1)
    assert _fails(yc, yc.theorem(mm="printed"))


def test_phi_mutation_detected(wa302c):
    yc = phi_check(wa302c, 1, mutate="phi-x01-alpha")
    assert _fails(yc, yc.prop())


def test_phi_requires_hypotheses():
    with pytest.raises(ValueError):
        phi_check(walgebra(2, 1, 2), 1)


# -- ev --------------------------------------------------------------------


@pytest.mark.parametrize("sample", [None, (1, 1), (2, 3)])
def test_ev_adopted_reading_passes(sample):
    yc = ev_check(3, 2, 1, sample=sample)
    assert not _fails(yc, yc.prop())
    assert not _fails(yc, yc.theorem())


def test_ev_printed_linear_terms_fail():
    yc = ev_check(3, 2, 1, linear="printed")
    assert _fails(yc, yc.prop())


def test_ev_mutation_detected():
    yc = ev_check(3, 2, 1, mutate="ev-h1-hbar")
    assert _fails(yc, yc.prop())
