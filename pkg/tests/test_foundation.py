from fractions import Fraction

import pytest

from rectw.foundation import ALPHA, C, ONE, Instance, Scalar


def test_scalar_ring_laws():
    a, c = Scalar.alpha(), Scalar.c()
    x = a * 3 - c + 2
    y = a * a + Fraction(1, 2)
    assert x * y == y * x
    assert (x + y) * a == x * a + y * a
    assert x - x == Scalar()
    assert not Scalar()
    assert (a - 1) ** 2 == a * a - a * 2 + 1


def test_scalar_specialize_and_evaluate():
    s = Scalar({ALPHA: 2, C: -1, ONE: Fraction(1, 3)})
    assert s.specialize_c0() == Scalar({ALPHA: 2, ONE: Fraction(1, 3)})
    assert s.evaluate(alpha=1, c=2) == Fraction(1, 3)


def test_scalar_rejects_inexact():
    with pytest.raises(TypeError):
        Scalar.const(0.5)
    with pytest.raises(ValueError):
        Scalar.alpha() ** -1


def test_scalar_json_round_trip():
    s = Scalar({ALPHA: Fraction(-3, 4), (2, 1): 5})
    assert Scalar.from_json(s.to_json()) == s


def test_parity_and_sign():
    inst = Instance(2, 1, 2)
    assert [inst.p(i) for i in (1, 2, 3)] == [0, 0, 1]
    assert inst.p(0) == inst.p(3)
    assert inst.pe(1, 3) == 1 and inst.pe(3, 3) == 0


def test_flat_index_and_grade():
    inst = Instance(2, 1, 2)
    # e_{N+1,1} sits one block below the diagonal: grade -1
    assert inst.grade(inst.N + 1, 1) == -1
    assert inst.grade(1, 1) == 0
    assert inst.grade(1, inst.N + 1) == 1
    assert inst.split(inst.flat(1, 2)) == (1, 2)


def test_yangian_hypotheses():
    Instance(3, 0, 2).check_yangian()
    Instance(3, 2, 2).check_yangian()
    for bad in [(2, 0, 2), (2, 2, 2), (2, 1, 2), (3, 0, 1)]:
        with pytest.raises(ValueError):
            Instance(*bad).check_yangian()
