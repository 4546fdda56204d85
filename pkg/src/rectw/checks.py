"""Check reports and the named coefficient mutations used for sensitivity runs."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .vertex import State

PASS = "pass"
FAIL = "fail"

# id -> (suite, what gets perturbed)
MUTATIONS: Dict[str, tuple] = {
    "gen-w2-alpha": ("gen", "closed-form W2: alpha*(s-1) coefficient of the e[-2] sum becomes alpha*s"),
    "d0-delta": ("d0", "d0: the alpha psi[-2] term of a current is dropped"),
    "ope-lem4-alpha2": ("ope", "(W2_ii)_(0) W2_jj: l(l-1)/2 alpha^2 coefficient doubled"),
    "ope-lem3-level": ("ope", "(W1)_(1) W2: (l-1)(lc-1) replaced by l(lc-1)"),
    "phi-x01-alpha": ("phi", "Phi(X+_{0,1}): (l-1) alpha W1_{1,N} t replaced by l alpha"),
    "ev-h1-hbar": ("ev", "ev(H_{i,1}), i != 0: hbar E_ii E_{i+1,i+1} coefficient doubled"),
    "appendix-929-r": ("appendix", "Eq. 929: coefficient (-1)^{p(i+1)} r replaced by (r+1)"),
    "engine-translate": ("engine", "engine: translation d(a[-s]) = s a[-s-1] uses s+1 instead"),
}


def mutated(mutate: Optional[str], mid: str) -> bool:
    if mutate is not None and mutate not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutate!r}")
    return mutate == mid


@dataclass
class CheckReport:
    id: str
    paper_ref: str
    status: str
    instance: str = ""
    residual: Optional[Any] = None
    millis: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "millis": round(self.millis, 3),
        }
        if self.instance:
            out["instance"] = self.instance
        if self.residual is not None:
            out["residual"] = self.residual
        if self.detail:
            out["detail"] = self.detail
        return out


def residual_json(res: State, limit: int = 20) -> List[dict]:
    return res.to_json()[:limit]


def compare_states(cid: str, ref: str, lhs: State, rhs: State, instance: str = "",
                   started: Optional[float] = None) -> CheckReport:
    res = lhs - rhs
    ms = (time.perf_counter() - started) * 1000 if started is not None else 0.0
    if res.is_zero():
        return CheckReport(cid, ref, PASS, instance, None, ms)
    return CheckReport(cid, ref, FAIL, instance, residual_json(res), ms)


def timed(cid: str, ref: str, fn: Callable[[], Optional[State]], instance: str = "") -> CheckReport:
    """Run ``fn`` (returning a residual State or None) and wrap it in a report."""
    t0 = time.perf_counter()
    res = fn()
    ms = (time.perf_counter() - t0) * 1000
    if res is None or res.is_zero():
        return CheckReport(cid, ref, PASS, instance, None, ms)
    return CheckReport(cid, ref, FAIL, instance, residual_json(res), ms)


@dataclass
class SuiteResult:
    suite: str
    checks: List[CheckReport] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckReport]:
        return [c for c in self.checks if not c.passed]
