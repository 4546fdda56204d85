"""Acceptance criteria, one test per criterion, all at zero tolerance.

Each criterion prints a single ``[PASS]`` or ``[FAIL]`` line (also collected
into the pytest terminal summary).  Run standalone with

    python3 tests/test_acceptance.py
"""
from __future__ import annotations

import os
import sys
import time
from collections import Counter
from typing import Dict, List, Tuple

sys.path.insert(0, os.path.dirname(__file__))

from rectw.checks import MUTATIONS  # noqa: E402
from rectw.foundation import Instance  # noqa: E402
from rectw.properties import PropertySuite  # noqa: E402
from rectw.reports import RunReport, SuiteConfig, run_suite  # noqa: E402
from rectw.wconstruct import WAlgebra  # noqa: E402

RESULTS: Dict[int, str] = {}
_RUNS: Dict[tuple, RunReport] = {}

FOUR = [(2, 1, 2), (2, 1, 3), (3, 0, 2), (3, 0, 3)]


def record(k: int, title: str, ok: bool, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title}: {detail}"
    RESULTS[k] = line
    print(line)
    return ok


def run(suite: str, m: int, n: int, l: int = 2, **kw) -> RunReport:
    key = (suite, m, n, l, tuple(sorted(kw.items())))
    if key not in _RUNS:
        _RUNS[key] = run_suite(SuiteConfig(suite, m, n, l, **kw))
    return _RUNS[key]


def _tally(rep: RunReport) -> str:
    s = rep.summary()
    return f"{s['passed']}/{s['total']}"


def _per_instance(suite: str, shapes, **kw) -> Tuple[bool, str]:
    ok, parts = True, []
    for m, n, l in shapes:
        t0 = time.perf_counter()
        rep = run(suite, m, n, l, **kw)
        ok &= rep.passed
        parts.append(f"({m},{n},{l}) {_tally(rep)} in {time.perf_counter() - t0:.1f}s")
    return ok, "; ".join(parts)


# ---------------------------------------------------------------------------


def criterion_1() -> bool:
    ok, detail = _per_instance("gen", FOUR)
    return record(1, "column determinant equals closed forms for r = 1, 2", ok, detail)


def criterion_2() -> bool:
    ok, detail = _per_instance("d0", FOUR)
    return record(2, "d0 annihilates every W generator", ok, detail)


def criterion_3() -> bool:
    ok, detail = _per_instance("ope", [(2, 1, 2), (3, 0, 2)])
    return record(3, "OPE lemmas and corollary, c symbolic", ok, detail)


def criterion_4() -> bool:
    ok1, d1 = _per_instance("phi", [(3, 0, 2)], cutoff=2)
    ok2, d2 = _per_instance("phi", [(3, 2, 2)], cutoff=1)
    return record(4, "Phi respects every relation at c = 0", ok1 and ok2, f"D=2 {d1}; D=1 {d2}")


def criterion_5() -> bool:
    rep = run("ev", 2, 1, cutoff=2)
    bad = Counter(c.id.split("/")[0] for c in rep.failures())
    ids = sorted({c.id.split("/", 1)[1] for c in rep.failures()})
    detail = f"(2,1) D=2 {_tally(rep)}"
    if bad:
        detail += f", failing {dict(bad)}: {', '.join(ids)} (n=1 lies outside m,n >= 2)"
    valid = run("ev", 3, 2, cutoff=2)
    detail += f"; valid instance (3,2) D=2 {_tally(valid)}"
    return record(5, "evaluation map relations on the gl^str vacuum module", rep.passed, detail)


def criterion_6() -> bool:
    ok, parts = True, []
    for m, n, l in [(2, 1, 3), (3, 0, 3)]:
        rep = run("appendix", m, n, l)
        printed = [c for c in rep.checks if not c.id.startswith("T3/")]
        corrected = [c for c in rep.checks if c.id.startswith("T3/")]
        bad = [c.id for c in printed if not c.passed]
        ok &= not bad
        cok = sum(c.passed for c in corrected)
        parts.append(f"({m},{n},{l}) {len(printed) - len(bad)}/{len(printed)}"
                     + (f", failing {', '.join(bad)}" if bad else "")
                     + f"; alpha coefficient (r+1)(-1)^p alpha {cok}/{len(corrected)}")
    return record(6, "appendix claims T0, T1, T3 with the printed coefficients", ok, "; ".join(parts))


def criterion_7() -> bool:
    t0 = time.perf_counter()
    rep = run("engine", 2, 1, 2)
    kinds = Counter(c.id.split("[")[0] for c in rep.checks)
    detail = (f"(2,1,2) {_tally(rep)} in {time.perf_counter() - t0:.0f}s ("
              + ", ".join(f"{k} {v}" for k, v in sorted(kinds.items())) + ")")
    return record(7, "vertex algebra axioms on weight <= 3 test sets", rep.passed, detail)


# mutation -> (suite, instance, extra config)
_MUTATION_RUNS = {
    "gen-w2-alpha": ("gen", (2, 1, 2), {}),
    "d0-delta": ("d0", (2, 1, 2), {}),
    "ope-lem4-alpha2": ("ope", (2, 1, 2), {}),
    "ope-lem3-level": ("ope", (2, 1, 2), {}),
    "phi-x01-alpha": ("phi", (3, 0, 2), {"cutoff": 1}),
    "ev-h1-hbar": ("ev", (3, 2, 2), {"cutoff": 1}),
    "appendix-929-r": ("appendix", (2, 1, 3), {}),
}


def _appendix_baseline(rep: RunReport) -> List:
    # the printed T3 coefficient fails without any mutation (criterion 6);
    # the sensitivity baseline is the corrected reading
    return [c for c in rep.checks if not c.id.startswith("T3[")]


def _translation_checks(shift: int) -> List:
    wa = WAlgebra(Instance(2, 1, 2))
    wa.va.translate_shift = shift
    ps = PropertySuite(wa.va, max_weight=3, instance=str(wa.inst))
    return ps._per_left("translation", "translation axiom", ps.translation)


def criterion_8() -> bool:
    ok, parts = True, []
    for mid in MUTATIONS:
        if mid == "engine-translate":
            key = ("engine", 2, 1, 2, ())
            if key in _RUNS:
                base = [c for c in _RUNS[key].checks if c.id.startswith("translation[")]
            else:
                base = _translation_checks(0)
            mut = _translation_checks(1)
            suite = "engine"
        else:
            suite, (m, n, l), kw = _MUTATION_RUNS[mid]
            base = run(suite, m, n, l, **kw).checks
            mut = run(suite, m, n, l, mutate=mid, **kw).checks
            if suite == "appendix":
                base, mut = _appendix_baseline(RunReport({}, base)), _appendix_baseline(RunReport({}, mut))
        base_ok = bool(base) and all(c.passed for c in base)
        caught = sum(not c.passed for c in mut)
        ok &= base_ok and caught > 0
        parts.append(f"{mid}: baseline {'pass' if base_ok else 'FAIL'}, {caught}/{len(mut)} fail")
    ok &= len({MUTATIONS[m][0] for m in MUTATIONS}) >= 5
    return record(8, "every named mutation is caught by its suite", ok, "; ".join(parts))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8]


def test_criterion_1():
    assert criterion_1(), RESULTS[1]


def test_criterion_2():
    assert criterion_2(), RESULTS[2]


def test_criterion_3():
    assert criterion_3(), RESULTS[3]


def test_criterion_4():
    assert criterion_4(), RESULTS[4]


def test_criterion_5():
    assert criterion_5(), RESULTS[5]


def test_criterion_6():
    assert criterion_6(), RESULTS[6]


def test_criterion_7():
    assert criterion_7(), RESULTS[7]


def test_criterion_8():
    assert criterion_8(), RESULTS[8]


if __name__ == "__main__":
    results = [fn() for fn in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
