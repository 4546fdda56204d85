import itertools

import pytest
from oracles import matrix_bracket, matrix_to_units, supermatrix_unit

from rectw.foundation import ALPHA, C, ONE, Instance, Scalar
from rectw.superalgebra import CURRENT, GHOST, UNIT, borel_ghost_algebra, gl_str_algebra, kappa_units

INSTANCES = [(2, 1, 2), (3, 0, 2), (1, 1, 2), (1, 2, 2)]


def _bracket_vec(alg, g, h):
    return {k: v for k, v in alg.bracket(g, h).items() if v}


def _expected_bracket(alg, inst, g, h):
    x, y = alg.gens[g], alg.gens[h]
    if x.kind == GHOST and y.kind == GHOST:
        return {}
    size = inst.size
    X = supermatrix_unit(size, x.row, x.col)
    Y = supermatrix_unit(size, y.row, y.col)
    M = matrix_bracket(X, Y, x.parity, y.parity)
    kind = GHOST if GHOST in (x.kind, y.kind) else CURRENT
    return {alg.gen_id(kind, a, b): v for (a, b), v in matrix_to_units(M).items()}


@pytest.mark.parametrize("shape", INSTANCES)
def test_borel_ghost_brackets_match_matrices(shape):
    inst = Instance(*shape)
    alg = borel_ghost_algebra(inst)
    for g in range(alg.G):
        for h in range(alg.G):
            assert _bracket_vec(alg, g, h) == _expected_bracket(alg, inst, g, h), (alg.label(g), alg.label(h))


@pytest.mark.parametrize("shape", INSTANCES[:2])
def test_jacobi_identity(shape):
    alg = borel_ghost_algebra(Instance(*shape))
    par = alg.par

    def br(vec, h):
        out = {}
        for g, c in vec.items():
            for k, v in alg.bracket(g, h).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def lbr(g, vec):
        out = {}
        for h, c in vec.items():
            for k, v in alg.bracket(g, h).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    for x, y, z in itertools.product(range(alg.G), repeat=3):
        # [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
        lhs = lbr(x, alg.bracket(y, z))
        r1 = br(alg.bracket(x, y), z)
        r2 = lbr(y, alg.bracket(x, z))
        s = -1 if par[x] * par[y] else 1
        rhs = dict(r1)
        for k, v in r2.items():
            rhs[k] = rhs.get(k, 0) + s * v
        assert lhs == {k: v for k, v in rhs.items() if v}


def test_kappa_example():
    inst = Instance(2, 1, 2)
    # alpha - c + 1 on e_{1,1} with itself
    assert kappa_units(inst, 1, 1, 1, 1) == Scalar({ALPHA: 1, C: -1, ONE: 1})
    # different diagonal blocks only see the -c part
    assert kappa_units(inst, 1, 1, 4, 4) == Scalar({C: -1})


@pytest.mark.parametrize("shape", INSTANCES[:2])
def test_kappa_supersymmetric_and_invariant(shape):
    inst = Instance(*shape)
    alg = borel_ghost_algebra(inst)
    cur = [g for g in range(alg.G) if alg.gens[g].kind == CURRENT]
    for x in cur:
        for y in cur:
            s = -1 if alg.par[x] * alg.par[y] else 1
            assert alg.kappa(x, y) == alg.kappa(y, x) * s
    for x, y, z in itertools.product(cur, repeat=3):
        lhs = sum((alg.kappa(k, z) * v for k, v in alg.bracket(x, y).items()), Scalar())
        rhs = sum((alg.kappa(x, k) * v for k, v in alg.bracket(y, z).items()), Scalar())
        assert lhs == rhs


def test_kappa_vanishes_on_ghosts_and_c_zero():
    inst = Instance(2, 1, 2)
    alg = borel_ghost_algebra(inst)
    gh = [g for g in range(alg.G) if alg.gens[g].kind == GHOST]
    assert all(not alg.kappa(g, h) for g in gh for h in range(alg.G))
    alg0 = borel_ghost_algebra(inst, c_zero=True)
    g11 = alg0.gen_id(CURRENT, 1, 1)
    assert alg0.kappa(g11, g11) == Scalar({ALPHA: 1, ONE: 1})


def test_ghost_parity_is_shifted():
    alg = borel_ghost_algebra(Instance(2, 1, 2))
    for g in alg.gens:
        if g.kind == GHOST:
            assert g.parity == (alg.instance.unit_parity(g.row, g.col) + 1) % 2


@pytest.mark.parametrize("mn", [(2, 1), (3, 2)])
def test_gl_str_brackets_and_form(mn):
    m, n = mn
    ct = Scalar.alpha()
    alg = gl_str_algebra(m, n, ct)
    inst = Instance(m, n, 1)
    N = inst.N
    for g in range(alg.G):
        for h in range(alg.G):
            x, y = alg.gens[g], alg.gens[h]
            M = matrix_bracket(supermatrix_unit(N, x.row, x.col), supermatrix_unit(N, y.row, y.col),
                               x.parity, y.parity)
            want = {alg.gen_id(UNIT, a, b): v for (a, b), v in matrix_to_units(M).items()}
            assert _bracket_vec(alg, g, h) == want
            # ctilde str(xy) + str(x) str(y)
            str_xy = inst.sign(x.row) if (x.col == y.row and x.row == y.col) else 0
            strx = inst.sign(x.row) if x.row == x.col else 0
            stry = inst.sign(y.row) if y.row == y.col else 0
            assert alg.kappa(g, h) == ct * str_xy + strx * stry
