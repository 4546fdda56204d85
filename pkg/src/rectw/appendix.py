"""Leading-term computations behind the generation theorem.

States of the Borel-ghost vertex algebra are graded by the total grade of
their letters: the letter of e_{A,B} (or of the ghost psi_{e_{A,B}}) has
grade colblock(B) - rowblock(A), whatever its depth.  "Higher terms" means
strictly larger total grade, so every claim below compares the component of
minimal grade and ignores the rest.

Sums written with the shorthand ``S(r, x, y)`` are

    S(r, x, y) = sum_{s=1}^{l-r} e_{(r+s-1)N+x, (s-1)N+y}[-1]|0>,

i.e. the whole diagonal r blocks below the main one, with index ranges
restricted to the matrix.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Dict, List, Optional

from .checks import CheckReport, SuiteResult, compare_states, mutated
from .foundation import ALPHA, Scalar
from .superalgebra import CURRENT, GHOST
from .vertex import State, nth_product
from .wconstruct import WAlgebra

REF_T0_NOM = "Claim T0 (1), Eq. nom"
REF_T0_NON = "Claim T0 (2), Eq. non"
REF_T1 = "Claim T1"
REF_T3 = "Claim T3, Eq. 929"

# alpha coefficient of the S(r,i,i) term in the T3 identity: "printed" is
# (-1)^{p(e_{i,i+1})} alpha, "corrected" is (r+1)(-1)^{p(e_{i,i+1})} alpha
# (the d=1 contribution of the B^2 part is +alpha, not -(r-1) alpha).
T3_ALPHA_READINGS = ("printed", "corrected")


def letter_grades(wa: WAlgebra) -> List[int]:
    """Grade of each generator id of the Borel-ghost algebra."""
    inst = wa.inst
    out = []
    for g in wa.alg.gens:
        if g.kind not in (CURRENT, GHOST):
            raise ValueError(f"no grade for generator kind {g.kind!r}")
        out.append(inst.grade(g.row, g.col))
    return out


class Grading:
    """Total grade on the PBW words of one instance."""

    def __init__(self, wa: WAlgebra):
        self.wa = wa
        self.va = wa.va
        self._g = letter_grades(wa)

    def word_grade(self, w) -> int:
        G, g = self.va.G, self._g
        return sum(g[x % G] for x in w)

    def components(self, u: State) -> Dict[int, State]:
        parts: Dict[int, State] = {}
        for (w, mono), c in u.terms.items():
            k = self.word_grade(w)
            part = parts.get(k)
            if part is None:
                part = parts[k] = State(self.va)
            part.terms[(w, mono)] = c
        return dict(sorted(parts.items()))

    def leading_component(self, u: State) -> State:
        """The homogeneous part of minimal grade (zero for the zero state)."""
        parts = self.components(u)
        if not parts:
            return State(self.va)
        return parts[min(parts)]

    def graded(self, u: State) -> "GradedState":
        return GradedState(u, self.components(u))


@dataclass
class GradedState:
    state: State
    parts: Dict[int, State]

    @property
    def leading_grade(self) -> Optional[int]:
        return min(self.parts) if self.parts else None

    @property
    def leading(self) -> State:
        if not self.parts:
            return State(self.state.va)
        return self.parts[min(self.parts)]

    def higher(self) -> State:
        out = State(self.state.va)
        lead = self.leading_grade
        for k, part in self.parts.items():
            if k != lead:
                out = out + part
        return out


def leading_component(wa: WAlgebra, u: State) -> State:
    return Grading(wa).leading_component(u)


class AppendixSuite:
    """Claims T0, T1 and T3 at one instance (c kept symbolic unless wa says otherwise)."""

    def __init__(self, wa: WAlgebra, mutate: Optional[str] = None, t3_alpha: str = "printed"):
        if t3_alpha not in T3_ALPHA_READINGS:
            raise ValueError(f"unknown T3 alpha reading {t3_alpha!r}")
        self.t3_alpha = t3_alpha
        self.wa = wa
        self.inst = wa.inst
        self.va = wa.va
        self.mutate = mutate
        self.tag = str(wa.inst)
        self.grading = Grading(wa)
        self._pow: Dict[tuple, State] = {}

    # -- building blocks ---------------------------------------------------
    def S(self, r: int, x: int, y: int) -> State:
        """sum_{s=1}^{l-r} e_{(r+s-1)N+x,(s-1)N+y}[-1]; empty for r >= l."""
        N, l = self.inst.N, self.inst.l
        out = State(self.va)
        for s in range(1, l - r + 1):
            out = out + self.wa.e((r + s - 1) * N + x, (s - 1) * N + y)
        return out

    def Z(self, i: int, j: int) -> State:
        """sum_{s=1}^{l-1} e_{sN+j,(s-1)N+i}[-1], the grade -1 part of W2_{i,j}."""
        return self.S(1, j, i)

    def W2_power(self, i: int, r: int, v: State, key: tuple) -> State:
        """((W2_{i,i})_(0))^r v, memoized under ``key``."""
        k = (i, r) + key
        if k not in self._pow:
            if r == 0:
                self._pow[k] = v
            else:
                prev = self.W2_power(i, r - 1, v, key)
                self._pow[k] = nth_product(self.wa.W(2, i, i), 0, prev)
        return self._pow[k]

    # -- Claim T0 ----------------------------------------------------------
    def nom_rhs(self, w: int, i: int, j: int, u: int, v: int) -> State:
        inst = self.inst
        out = State(self.va)
        if i == u:
            out = out + self.S(w + 1, j, v)
        if j == v:
            out = out - self.S(w + 1, u, i) * (-1) ** (inst.pe(i, j) * inst.pe(u, v))
        return out

    def check_nom(self, w: int, i: int, j: int, u: int, v: int) -> CheckReport:
        t0 = time.perf_counter()
        lhs = nth_product(self.Z(i, j), 0, self.S(w, u, v))
        return compare_states(f"T0nom[w={w},{i},{j},{u},{v}]", REF_T0_NOM, lhs,
                              self.nom_rhs(w, i, j, u, v), self.tag, t0)

    def non_rhs(self, r: int, i: int, j: int, x: int, y: int) -> State:
        inst = self.inst
        out = State(self.va)
        if i == x:
            out = out + self.S(r, j, y)
        if j == y:
            out = out - self.S(r, x, i) * (-1) ** (inst.pe(i, j) * inst.pe(x, y))
        return out

    def check_non(self, r: int, i: int, j: int, x: int, y: int) -> CheckReport:
        t0 = time.perf_counter()
        lhs = nth_product(self.wa.W(1, i, j), 0, self.S(r, x, y))
        return compare_states(f"T0non[r={r},{i},{j},{x},{y}]", REF_T0_NON, lhs,
                              self.non_rhs(r, i, j, x, y), self.tag, t0)

    def claim_T0(self) -> List[CheckReport]:
        N, l = self.inst.N, self.inst.l
        out = []
        idx = range(1, N + 1)
        for w in range(l):
            for i in idx:
                for j in idx:
                    for u in idx:
                        for v in idx:
                            out.append(self.check_nom(w, i, j, u, v))
                            out.append(self.check_non(w, i, j, u, v))
        return out

    # -- Claim T1 ----------------------------------------------------------
    def t1_chain(self, r: int, i: int, j: int) -> State:
        """((W2_{i,i})_(0))^r W1_{j,i}."""
        return self.W2_power(i, r, self.wa.W(1, j, i), ("W1", j))

    def _leading_check(self, cid: str, ref: str, full: State, expected: State, t0: float) -> CheckReport:
        rep = compare_states(cid, ref, self.grading.leading_component(full), expected, self.tag, t0)
        if not rep.passed:
            parts = self.grading.components(full)
            rep.detail = "grades present: " + ", ".join(str(k) for k in parts)
        return rep

    def check_T1_offdiag(self, r: int, i: int, j: int) -> CheckReport:
        if i == j:
            raise ValueError("part (1) needs i != j")
        t0 = time.perf_counter()
        return self._leading_check(f"T1a[r={r},{i},{j}]", REF_T1 + " (1)", self.t1_chain(r, i, j),
                                   self.S(r, i, j), t0)

    def check_T1_diag(self, r: int, i: int) -> CheckReport:
        inst = self.inst
        t0 = time.perf_counter()
        full = nth_product(self.wa.W(1, i, i + 1), 0, self.t1_chain(r, i, i + 1))
        expected = self.S(r, i + 1, i + 1) - self.S(r, i, i) * inst.sign(i) * inst.sign(i + 1)
        return self._leading_check(f"T1b[r={r},{i}]", REF_T1 + " (2)", full, expected, t0)

    def claim_T1(self) -> List[CheckReport]:
        N, l = self.inst.N, self.inst.l
        out = []
        for r in range(l):
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    if i != j:
                        out.append(self.check_T1_offdiag(r, i, j))
            for i in range(1, N):
                out.append(self.check_T1_diag(r, i))
        return out

    # -- Claim T3 ----------------------------------------------------------
    def t3_lhs(self, r: int, i: int) -> State:
        """(W2_ii)_(1) (W1_{i,i+1})_(0) ((W2_ii)_(0))^r W1_{i+1,i}."""
        inner = nth_product(self.wa.W(1, i, i + 1), 0, self.t1_chain(r, i, i + 1))
        return nth_product(self.wa.W(2, i, i), 1, inner)

    def t3_coefficients(self, r: int, i: int) -> Dict[str, Scalar]:
        inst = self.inst
        rr = r + 1 if mutated(self.mutate, "appendix-929-r") else r
        ka = r + 1 if self.t3_alpha == "corrected" else 1
        return {
            "alpha": Scalar({ALPHA: ka * inst.sign(i) * inst.sign(i + 1)}),
            "r_i": Scalar.const(inst.sign(i + 1) * rr),
            "r_i1": Scalar.const(-inst.sign(i) * r),
        }

    def t3_rhs(self, r: int, i: int) -> State:
        k = self.t3_coefficients(r, i)
        Si, Si1 = self.S(r, i, i), self.S(r, i + 1, i + 1)
        return Si * (k["alpha"] + k["r_i"]) + Si1 * k["r_i1"]

    def check_T3(self, r: int, i: int) -> CheckReport:
        if not 1 <= r <= self.inst.l - 1:
            raise ValueError("Claim T3 needs 1 <= r <= l-1")
        if not 1 <= i <= self.inst.N - 1:
            raise ValueError("Claim T3 needs 1 <= i <= N-1")
        t0 = time.perf_counter()
        tag = "" if self.t3_alpha == "printed" else "/" + self.t3_alpha
        return self._leading_check(f"T3{tag}[r={r},{i}]", REF_T3, self.t3_lhs(r, i), self.t3_rhs(r, i), t0)

    def claim_T3(self) -> List[CheckReport]:
        return [self.check_T3(r, i) for r in range(1, self.inst.l) for i in range(1, self.inst.N)]

    def run(self) -> SuiteResult:
        res = SuiteResult("appendix")
        res.checks.extend(self.claim_T0())
        res.checks.extend(self.claim_T1())
        res.checks.extend(self.claim_T3())
        return res
