"""Finite-dimensional Lie superalgebras with an even invariant form.

Two concrete families are provided:

* :func:`borel_ghost_algebra` -- currents ``J^{e_{A,B}}`` on the non-positive
  part of gl(ml|nl) together with odd-shifted ghosts ``psi_{e_{A,B}}`` on the
  strictly negative part, with the form kappa on currents and zero on ghosts.
* :func:`gl_str_algebra` -- gl(m|n) with the supertrace cocycle
  ``ctilde * str(xy) + str(x) str(y)`` (central z fixed to 1).

Both are represented by a :class:`LieSuperalgebra`: integer generator ids,
a dense bracket table with integer structure constants, and a form table
whose values are polynomial coefficient maps (see :mod:`rectw.foundation`).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .foundation import ALPHA, C, ONE, Instance, Mono, Scalar, delta

CURRENT = "J"
GHOST = "psi"
UNIT = "E"

Bracket = Tuple[Tuple[int, int], ...]  # ((gen id, integer coefficient), ...)


@dataclass(frozen=True)
class Generator:
    kind: str
    row: int
    col: int
    parity: int

    def label(self) -> str:
        if self.kind == CURRENT:
            return f"e{self.row},{self.col}"
        if self.kind == GHOST:
            return f"psi{self.row},{self.col}"
        return f"E{self.row},{self.col}"


class LieSuperalgebra:
    """Generators, super bracket and even bilinear form, all on a fixed basis."""

    def __init__(self, name: str, gens: Sequence[Generator], instance: Instance):
        self.name = name
        self.instance = instance
        self.gens: List[Generator] = list(gens)
        self.G = len(self.gens)
        self.index: Dict[Tuple[str, int, int], int] = {
            (g.kind, g.row, g.col): k for k, g in enumerate(self.gens)
        }
        self.par: List[int] = [g.parity for g in self.gens]
        self.br: List[List[Bracket]] = [[() for _ in range(self.G)] for _ in range(self.G)]
        self.form: List[List[Optional[Dict[Mono, int]]]] = [
            [None] * self.G for _ in range(self.G)
        ]

    def gen_id(self, kind: str, row: int, col: int) -> int:
        try:
            return self.index[(kind, row, col)]
        except KeyError:
            raise ValueError(f"{kind}_{{{row},{col}}} is not a generator of {self.name}") from None

    def has(self, kind: str, row: int, col: int) -> bool:
        return (kind, row, col) in self.index

    def bracket(self, g: int, h: int) -> Dict[int, int]:
        return dict(self.br[g][h])

    def kappa(self, g: int, h: int) -> Scalar:
        f = self.form[g][h]
        return Scalar(f) if f else Scalar()

    def label(self, g: int) -> str:
        return self.gens[g].label()

    def _set_bracket(self, g: int, h: int, out: Dict[int, int]) -> None:
        self.br[g][h] = tuple(sorted((k, v) for k, v in out.items() if v))

    def _set_form(self, g: int, h: int, val: Dict[Mono, int]) -> None:
        val = {k: v for k, v in val.items() if v}
        self.form[g][h] = val or None


def _add(out: Dict[int, int], k: Optional[int], v: int) -> None:
    if k is None or not v:
        return
    out[k] = out.get(k, 0) + v


def borel_ghost_algebra(inst: Instance, with_ghosts: bool = True, c_zero: bool = False) -> LieSuperalgebra:
    """Currents on the non-positive grades of gl(ml|nl) plus ghosts on negative grades.

    The form on two currents is
    ``d(s1,t2) d(t1,s2) d(i1,j2) d(j1,i2) (-1)^p(i1) alpha
    - d(s1,t1) d(s2,t2) d(i1,j1) d(i2,j2) (-1)^(p(i1)+p(i2)) (c - d(s1,s2))``
    and vanishes whenever a ghost is involved.  ``c_zero`` specializes c = 0.
    """
    size = inst.size
    gens: List[Generator] = []
    for A in range(1, size + 1):
        for B in range(1, size + 1):
            if inst.grade(A, B) <= 0:
                gens.append(Generator(CURRENT, A, B, inst.unit_parity(A, B)))
    if with_ghosts:
        for A in range(1, size + 1):
            for B in range(1, size + 1):
                if inst.grade(A, B) < 0:
                    gens.append(Generator(GHOST, A, B, (inst.unit_parity(A, B) + 1) % 2))
    alg = LieSuperalgebra(f"a{inst}", gens, inst)

    def cur(A, B):
        return alg.index.get((CURRENT, A, B))

    def gho(A, B):
        return alg.index.get((GHOST, A, B))

    for g, x in enumerate(gens):
        for h, y in enumerate(gens):
            out: Dict[int, int] = {}
            if x.kind == CURRENT and y.kind == CURRENT:
                px, py = x.parity, y.parity
                if x.col == y.row:
                    _add(out, cur(x.row, y.col), 1)
                if y.col == x.row:
                    _add(out, cur(y.row, x.col), -(-1) ** (px * py))
            elif x.kind == CURRENT and y.kind == GHOST:
                _current_on_ghost(inst, x, y, out, gho, 1)
            elif x.kind == GHOST and y.kind == CURRENT:
                # [psi, J] = -(-1)^{p(psi)p(J)} [J, psi]
                _current_on_ghost(inst, y, x, out, gho, -(-1) ** (x.parity * y.parity))
            alg._set_bracket(g, h, out)
            if x.kind == CURRENT and y.kind == CURRENT:
                val = _kappa_units(inst, x.row, x.col, y.row, y.col)
                if c_zero:
                    val.pop(C, None)
                alg._set_form(g, h, val)
    return alg


def _current_on_ghost(inst, x: Generator, y: Generator, out, gho, factor: int) -> None:
    # [J^{e_ij}, psi_{e_st}] = d_js psi_{e_it} - d_it (-1)^{p(e_ij)(p(e_st)+1)} psi_{e_sj}
    pij = x.parity
    pst = inst.unit_parity(y.row, y.col)
    if x.col == y.row:
        _add(out, gho(x.row, y.col), factor)
    if x.row == y.col:
        _add(out, gho(y.row, x.col), -factor * (-1) ** (pij * (pst + 1)))


def _kappa_units(inst: Instance, A1: int, B1: int, A2: int, B2: int) -> Dict[Mono, int]:
    s1, i1 = inst.split(A1)
    t1, j1 = inst.split(B1)
    s2, i2 = inst.split(A2)
    t2, j2 = inst.split(B2)
    val: Dict[Mono, int] = {}
    if s1 == t2 and t1 == s2 and i1 == j2 and j1 == i2:
        val[ALPHA] = val.get(ALPHA, 0) + inst.sign(i1)
    if s1 == t1 and s2 == t2 and i1 == j1 and i2 == j2:
        sg = inst.sign(i1) * inst.sign(i2)
        val[C] = val.get(C, 0) - sg
        if s1 == s2:
            val[ONE] = val.get(ONE, 0) + sg
    return val


def kappa_units(inst: Instance, A1: int, B1: int, A2: int, B2: int) -> Scalar:
    """kappa(e_{A1,B1}, e_{A2,B2}) on all of gl(ml|nl)."""
    for X in (A1, B1, A2, B2):
        inst.split(X)
    return Scalar(_kappa_units(inst, A1, B1, A2, B2))


def str_units(inst: Instance, a: int, b: int, c: int, d: int) -> int:
    """str(E_{a,b} E_{c,d}) in gl(m|n)."""
    return inst.sign(a) if (b == c and a == d) else 0


def gl_str_algebra(m: int, n: int, ctilde: Scalar) -> LieSuperalgebra:
    """gl(m|n) with the supertrace cocycle at z = 1, evaluated on matrix units.

    Basis-unit reading: form(E_ab, E_cd) = ctilde str(E_ab E_cd)
    + d_ab d_cd (-1)^{p(a)+p(c)}.  On sl(m|n) the second piece cancels
    because str vanishes there.
    """
    inst = Instance(m, n, 1)
    N = inst.N
    gens = [Generator(UNIT, a, b, inst.pe(a, b)) for a in range(1, N + 1) for b in range(1, N + 1)]
    alg = LieSuperalgebra(f"gl({m}|{n})", gens, inst)
    ct = Scalar.coerce(ctilde)
    for g, x in enumerate(gens):
        for h, y in enumerate(gens):
            out: Dict[int, int] = {}
            if x.col == y.row:
                _add(out, alg.index[(UNIT, x.row, y.col)], 1)
            if y.col == x.row:
                _add(out, alg.index[(UNIT, y.row, x.col)], -(-1) ** (x.parity * y.parity))
            alg._set_bracket(g, h, out)
            val = ct * str_units(inst, x.row, x.col, y.row, y.col)
            if x.row == x.col and y.row == y.col:
                val = val + inst.sign(x.row) * inst.sign(y.row)
            alg._set_form(g, h, dict(val.terms))
    return alg


def gl_kappa_form(inst: Instance, a: int, b: int, c: int, d: int) -> Scalar:
    """The level of gl(m|n)^kappa with ctilde = l alpha and x = 1.

    str(E_ab E_cd) l alpha, plus -l(lc-1)(-1)^{p(a)+p(c)} on diagonal pairs.
    """
    l = inst.l
    val = Scalar.alpha() * (l * str_units(inst, a, b, c, d))
    if a == b and c == d:
        val = val - (Scalar.c() * l - 1) * (l * inst.sign(a) * inst.sign(c))
    return val
