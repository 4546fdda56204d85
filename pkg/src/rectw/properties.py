"""Vertex-algebra axioms checked on finite sets of PBW words.

Each property returns one CheckReport per (property, left word) so a
failure points at the offending state; the right factor and the mode
index go into the detail string.
"""
from __future__ import annotations

import time
from typing import Iterable, List, Optional, Sequence, Tuple

from .checks import FAIL, PASS, CheckReport, SuiteResult, residual_json
from .foundation import ONE
from .vertex import State, VertexAlgebra, gbinom, nth_product, translate, translate_power

Word = Tuple[int, ...]


def basis_words(va: VertexAlgebra, max_weight: int, include_vacuum: bool = False) -> List[Word]:
    """All PBW words of weight <= max_weight in canonical order."""
    from .yangian import pbw_basis

    words = pbw_basis(va, max_weight)
    return [w for w in words if w or include_vacuum]


def _neg1(k: int) -> int:
    return -1 if k % 2 else 1


def _state(va: VertexAlgebra, w: Word) -> State:
    return State(va, {(w, ONE): 1})


def _n_range(va: VertexAlgebra, u: Word, v: Word, below: int = 2) -> range:
    top = va.word_weight(u) + va.word_weight(v)
    return range(-below, top + 1)


class PropertySuite:
    """Axiom checks over all pairs (u, v) of words with wt(u) + wt(v) <= max_weight."""

    def __init__(self, va: VertexAlgebra, max_weight: int = 3, instance: str = "", below: int = 2):
        self.va = va
        self.max_weight = max_weight
        self.instance = instance
        self.below = below
        self.words = basis_words(va, max_weight)

    def pairs(self) -> Iterable[Tuple[Word, Word]]:
        wt = self.va.word_weight
        for u in self.words:
            for v in self.words:
                if wt(u) + wt(v) <= self.max_weight:
                    yield u, v

    def _report(self, cid: str, ref: str, t0: float, bad: Optional[Tuple[str, State]]) -> CheckReport:
        ms = (time.perf_counter() - t0) * 1000
        if bad is None:
            return CheckReport(cid, ref, PASS, self.instance, None, ms)
        detail, res = bad
        return CheckReport(cid, ref, FAIL, self.instance, residual_json(res), ms, detail)

    def _per_left(self, name: str, ref: str, test) -> List[CheckReport]:
        out = []
        by_left = {}
        for u, v in self.pairs():
            by_left.setdefault(u, []).append(v)
        for u, vs in by_left.items():
            t0 = time.perf_counter()
            bad = None
            for v in vs:
                bad = test(u, v)
                if bad is not None:
                    break
            out.append(self._report(f"{name}[{_state(self.va, u).word_str(u)}]", ref, t0, bad))
        return out

    # -- the axioms -----------------------------------------------------------
    def quasi_symmetry(self, u: Word, v: Word):
        va = self.va
        U, V = _state(va, u), _state(va, v)
        sg = (-1) ** (va.word_parity(u) * va.word_parity(v))
        for n in _n_range(va, u, v, self.below):
            lhs = nth_product(U, n, V)
            rhs = State(va)
            j = 0
            while n + j < va.word_weight(u) + va.word_weight(v):
                term = nth_product(V, n + j, U)
                if term:
                    rhs = rhs + translate_power(term, j, divided=True) * (-sg * _neg1(n + j))
                j += 1
            res = lhs - rhs
            if res:
                return f"v={V.word_str(v)} n={n}", res
        return None

    def translation(self, u: Word, v: Word):
        va = self.va
        U, V = _state(va, u), _state(va, v)
        dU = translate(U)
        for n in _n_range(va, u, v, self.below):
            res = nth_product(dU, n, V) + nth_product(U, n - 1, V) * n
            if res:
                return f"v={V.word_str(v)} n={n}", res
        return None

    def derivation(self, u: Word, v: Word):
        va = self.va
        U, V = _state(va, u), _state(va, v)
        dU, dV = translate(U), translate(V)
        for n in _n_range(va, u, v, self.below):
            res = translate(nth_product(U, n, V)) - nth_product(dU, n, V) - nth_product(U, n, dV)
            if res:
                return f"v={V.word_str(v)} n={n}", res
        return None

    def grading(self, u: Word, v: Word):
        va = self.va
        U, V = _state(va, u), _state(va, v)
        p = (va.word_parity(u) + va.word_parity(v)) % 2
        for n in _n_range(va, u, v, self.below):
            out = nth_product(U, n, V)
            want = va.word_weight(u) + va.word_weight(v) - n - 1
            for w, _ in out.terms:
                if va.word_weight(w) != want or va.word_parity(w) != p:
                    return (f"v={V.word_str(v)} n={n} word {out.word_str(w)} has weight "
                            f"{va.word_weight(w)} parity {va.word_parity(w)}, expected {want}, {p}"), out
        return None

    def borcherds(self, u: Word, v: Word, targets: Sequence[Word], modes: Sequence[int]):
        """[u_(a), v_(b)] w = sum_j C(a,j) (u_(j) v)_(a+b-j) w."""
        va = self.va
        U, V = _state(va, u), _state(va, v)
        sg = (-1) ** (va.word_parity(u) * va.word_parity(v))
        prods = {}
        j = 0
        while j < va.word_weight(u) + va.word_weight(v):
            prods[j] = nth_product(U, j, V)
            j += 1
        for w in targets:
            W = _state(va, w)
            for a in modes:
                for b in modes:
                    lhs = nth_product(U, a, nth_product(V, b, W)) - nth_product(V, b, nth_product(U, a, W)) * sg
                    rhs = State(va)
                    for j, p in prods.items():
                        c = gbinom(a, j)
                        if c and p:
                            rhs = rhs + nth_product(p, a + b - j, W) * c
                    res = lhs - rhs
                    if res:
                        return f"v={V.word_str(v)} w={W.word_str(w)} a={a} b={b}", res
        return None

    def generators(self) -> List[Word]:
        va = self.va
        return [w for w in self.words if va.word_weight(w) == 1]

    def representatives(self) -> List[Word]:
        """One generator per (kind, parity, grade) class, first in canonical order."""
        va = self.va
        seen, out = set(), []
        for w in self.generators():
            g = va.alg.gens[va.gen(w[0])]
            inst = va.alg.instance
            cls = (g.kind, g.parity, inst.grade(g.row, g.col) if g.kind != "E" else 0)
            if cls not in seen:
                seen.add(cls)
                out.append(w)
        return out

    def run(self, modes: Sequence[int] = range(-2, 3)) -> SuiteResult:
        res = SuiteResult("engine")
        res.checks += self._per_left("quasi-symmetry", "vertex algebra skew symmetry", self.quasi_symmetry)
        res.checks += self._per_left("translation", "translation axiom (du)_(n) = -n u_(n-1)", self.translation)
        res.checks += self._per_left("derivation", "d is a derivation of every n-th product", self.derivation)
        res.checks += self._per_left("grading", "weight additivity and parity", self.grading)
        res.checks += self.run_borcherds(modes=modes)
        return res

    def borcherds_plan(self) -> List[Tuple[str, Word, List[Word]]]:
        """(label, u, targets): every generator u against w of weight <= 1, then one
        representative u per class against every w of weight 2."""
        va = self.va
        low = [()] + [w for w in self.words if va.word_weight(w) == 1]
        two = [w for w in self.words if va.word_weight(w) == 2]
        plan = [("borcherds", u, low) for u in self.generators()]
        plan += [("borcherds-w2", u, two) for u in self.representatives()]
        return plan

    def run_borcherds(self, plan=None, modes: Sequence[int] = range(-2, 3)) -> List[CheckReport]:
        """[u_(a), v_(b)] w for every generator v, |a|, |b| <= 2."""
        va = self.va
        if plan is None:
            plan = self.borcherds_plan()
        right = self.generators()
        out = []
        for label, u, targets in plan:
            t0 = time.perf_counter()
            bad = None
            for v in right:
                bad = self.borcherds(u, v, targets, modes)
                if bad is not None:
                    break
            out.append(self._report(f"{label}[{_state(va, u).word_str(u)}]",
                                    "Borcherds commutator formula", t0, bad))
        return out
