from collections import Counter

import pytest
from oracles import ModeOracle, _add

from rectw.ope import OpeSuite
from rectw.vertex import nth_product


@pytest.fixture(scope="module")
def ope212(wa212):
    return OpeSuite(wa212).run()


def test_ope_suite_passes(ope212):
    assert ope212.checks
    assert ope212.passed, [c.id for c in ope212.failures()][:10]


def test_ope_suite_covers_every_statement(ope212):
    refs = Counter(c.paper_ref for c in ope212.checks)
    for name in ("Lem1", "Lem2", "Lem3 (1)", "Lem3 (2)", "Lem4 (0)", "Lem4 (1)", "COR"):
        assert any(name in r for r in refs), name


def test_ope_suite_passes_without_odd_part(wa302):
    res = OpeSuite(wa302).run()
    assert res.passed


def test_w1_products_against_mode_oracle(wa212):
    """(W1_{ij})_(k) W2_{pq} recomputed with the brute-force mode expansion."""
    oracle = ModeOracle(wa212.va.alg)
    pairs = [((1, 2), (2, 1)), ((1, 3), (3, 1)), ((3, 3), (1, 2)), ((2, 2), (2, 2))]
    for (i, j), (p, q) in pairs:
        u = wa212.W(1, i, j)
        v = oracle.from_state(wa212.W(2, p, q))
        for k in range(0, 3):
            want = {}
            for raw_u, cu in oracle.from_state(u).items():
                for w, c in oracle.nth(raw_u, k, v).items():
                    _add(want, w, c * cu)
            got = oracle.from_state(nth_product(u, k, wa212.W(2, p, q)))
            assert got == oracle.to_words(want), ((i, j), (p, q), k)


@pytest.mark.parametrize("mutate, ref", [
    ("ope-lem4-alpha2", "Lem4 (0)"),
    ("ope-lem3-level", "Lem3 (1)"),
])
def test_mutations_are_detected(wa212, mutate, ref):
    res = OpeSuite(wa212, mutate=mutate).run()
    assert res.failures()
    assert any(ref in c.paper_ref for c in res.failures())


def test_first_block_kappa_reading_fails(wa212):
    res = OpeSuite(wa212, kappa_reading="first-block").run()
    assert any("(2)-product" in c.paper_ref for c in res.failures())


def test_unknown_kappa_reading(wa212):
    with pytest.raises(ValueError):
        OpeSuite(wa212, kappa_reading="other")
