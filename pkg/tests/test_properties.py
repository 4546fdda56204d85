"""Light runs of the axiom suite; the weight-3 run at (2,1,2) is an acceptance criterion."""
import pytest
from conftest import walgebra

from rectw.foundation import Scalar
from rectw.properties import PropertySuite, basis_words
from rectw.superalgebra import gl_str_algebra
from rectw.vertex import VertexAlgebra


def test_basis_counts(wa212):
    va = wa212.va
    # one vacuum, 36 generators, then the weight-2 words
    assert len(basis_words(va, 1, include_vacuum=True)) == 37
    assert len(basis_words(va, 2)) == 36 + 685


@pytest.mark.parametrize("make", [
    lambda: walgebra(1, 1, 2).va,
    lambda: VertexAlgebra(gl_str_algebra(2, 1, Scalar.alpha())),
], ids=["w-1-1-2", "gl-2-1"])
def test_axioms_hold_at_weight_two(make):
    suite = PropertySuite(make(), max_weight=2)
    res = suite.run(modes=range(-1, 2))
    assert res.checks
    assert res.passed, [c.id for c in res.failures()][:5]


def test_representatives_cover_classes(wa212):
    suite = PropertySuite(wa212.va, max_weight=2)
    reps = suite.representatives()
    assert len(reps) == 6
    assert set(reps) <= set(suite.generators())


def test_shifted_translation_is_caught():
    va = VertexAlgebra(gl_str_algebra(2, 1, Scalar.alpha()))
    va.translate_shift = 1
    suite = PropertySuite(va, max_weight=2)
    bad = suite._per_left("translation", "translation", suite.translation)
    assert any(not r.passed for r in bad)
