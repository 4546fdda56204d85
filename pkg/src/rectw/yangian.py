"""Affine super Yangian presentations and their images in mode algebras.

Generators are keyed ``("H", i, r)``, ``("X+", i, r)``, ``("X-", i, r)`` with
``r`` in {0, 1}.  An image is a :class:`ModeExpression`: a Scalar-linear
combination of products of modes ``u t^a`` (acting as ``u_(a)``), where a
term may be an infinite sum over ``s >= 0`` with exponents ``a + b*s``.
On a vacuum-module state such a sum is finite: the rightmost factor has
slope +1 and ``u_(k) v = 0`` once ``k >= wt(u) + wt(v)``.

Relations are small operator trees (generator, linear combination,
composition, super commutator, anticommutator ``xy + yx``) evaluated on
PBW basis states of bounded weight.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .checks import FAIL, PASS, CheckReport, SuiteResult, mutated
from .foundation import ONE, Instance, Scalar
from .superalgebra import UNIT, gl_str_algebra
from .vertex import State, Terms, VertexAlgebra, Word, _acc, _mono_mul
from .wconstruct import WAlgebra

GenKey = Tuple[str, int, int]

PHI_X01_READINGS = ("printed", "transposed")
PHI_LINEAR_READINGS = ("printed", "hbar")
# sign of the l alpha Phi(X+_{0,0}) term of Phi(X+_{0,1})
PHI_XP01_READINGS = ("printed", "negated")
EV_LINEAR_READINGS = ("printed", "negated")
# interior rows of the m-matrix: as printed, or with i = j+1 and i = j-1 exchanged
MM_READINGS = ("printed", "swapped")
# sign of the (e1 - e2) shift in Psi(h_{i,1})
PSI_READINGS = ("printed", "negated")
# sign of the anticommutator in the (0, N-1) boundary relation Eq2.9
EQ29_READINGS = ("printed", "cartan")


# ---------------------------------------------------------------------------
# Cartan data


class YangianData:
    """Index conventions and parameters of Y_{e1,e2}(sl^(m|n)).

    ``n == 0`` selects the non-super tables.  Parameters are Scalars so that
    the Phi run can keep alpha symbolic.
    """

    def __init__(self, m: int, n: int, eps1, eps2, mm_reading: str = "swapped"):
        if mm_reading not in MM_READINGS:
            raise ValueError(f"unknown m-matrix reading {mm_reading!r}")
        self.mm_reading = mm_reading
        self.m, self.n = m, n
        self.N = m + n
        self.super = n > 0
        self.eps1 = Scalar.coerce(eps1)
        self.eps2 = Scalar.coerce(eps2)
        self.hbar = self.eps1 + self.eps2
        self.eps = self.eps2 * (-(m - n))
        # the shift eps + (m-n) hbar / 2 of the (0, N-1) relations
        self.shift = self.eps + self.hbar * Fraction(m - n, 2)

    def p(self, i: int) -> int:
        i = i % self.N or self.N
        return 0 if i <= self.m else 1

    def sign(self, i: int) -> int:
        return -1 if self.p(i) else 1

    def gen_parity(self, key: GenKey) -> int:
        kind, i, _ = key
        if kind == "H" or not self.super:
            return 0
        return 1 if i in (0, self.m) else 0

    def a(self, i: int, j: int) -> int:
        N = self.N
        if not self.super:
            if i == j:
                return 2
            if (i - j) % N in (1, N - 1):
                return -1
            return 0
        if i == j:
            return self.sign(i) + self.sign(i + 1)
        if j == i + 1:
            return -self.sign(i + 1)
        if j == i - 1:
            return -self.sign(i)
        if (i, j) in ((0, N - 1), (N - 1, 0)):
            return 1
        return 0

    def mm(self, i: int, j: int) -> int:
        """m_{ij}; "swapped" exchanges the conditions i = j+1 and i = j-1."""
        N = self.N
        sw = self.mm_reading == "swapped"
        if not self.super:
            if j == i + 1:
                return -1 if sw else 1
            if j == i - 1:
                return 1 if sw else -1
            if (i, j) == (0, N - 1):
                return 1
            if (i, j) == (N - 1, 0):
                return -1
            return 0
        if i == j + 1:
            return self.sign(i) if sw else -self.sign(i + 1)
        if i == j - 1:
            return -self.sign(i + 1) if sw else self.sign(i)
        if (i, j) == (0, N - 1):
            return -1
        if (i, j) == (N - 1, 0):
            return 1
        return 0

    def odd_nodes(self) -> Tuple[int, ...]:
        return (0, self.m) if self.super else ()

    def linear_coeff(self, i: int) -> Fraction:
        """(i - 2 d(i > m)(i - m)) / 2."""
        return Fraction(i - (2 * (i - self.m) if i > self.m else 0), 2)

    def psi_shift(self, i: int) -> Scalar:
        """kappa_i with Psi(h_{i,1}) = H_{i,1} - kappa_i H_{i,0}."""
        if i == 0:
            return Scalar()
        return (self.eps1 - self.eps2) * self.linear_coeff(i)

    def keys(self) -> List[GenKey]:
        return [(k, i, r) for r in (0, 1) for i in range(self.N) for k in ("H", "X+", "X-")]


def key_str(key: GenKey) -> str:
    return f"{key[0]}[{key[1]},{key[2]}]"


# ---------------------------------------------------------------------------
# mode expressions


@dataclass(frozen=True)
class Mode:
    """``u t^(a + b s)`` with u named in a state table."""

    state: str
    a: int
    b: int = 0


@dataclass(frozen=True)
class ModeTerm:
    coeff: Scalar
    modes: Tuple[Mode, ...] = ()
    summed: bool = False

    def __post_init__(self):
        if self.summed:
            if not self.modes or self.modes[-1].b != 1:
                raise ValueError("a summed term needs slope +1 on its rightmost mode")
        elif any(md.b for md in self.modes):
            raise ValueError("only summed terms may carry s-dependent exponents")


class ModeExpression:
    """A finite list of :class:`ModeTerm`; the empty mode tuple is the identity."""

    def __init__(self, terms: Sequence[ModeTerm] = (), name: str = ""):
        self.terms: Tuple[ModeTerm, ...] = tuple(t for t in terms if t.coeff)
        self.name = name

    @classmethod
    def scalar(cls, x) -> "ModeExpression":
        return cls([ModeTerm(Scalar.coerce(x))])

    @classmethod
    def mode(cls, state: str, a: int, coeff=1) -> "ModeExpression":
        return cls([ModeTerm(Scalar.coerce(coeff), (Mode(state, a),))])

    @classmethod
    def series(cls, factors: Sequence[Tuple[str, int, int]], coeff=1) -> "ModeExpression":
        """sum over s >= 0 of the product of ``state t^(a + b s)``."""
        modes = tuple(Mode(st, a, b) for st, a, b in factors)
        return cls([ModeTerm(Scalar.coerce(coeff), modes, summed=True)])

    def __add__(self, other: "ModeExpression") -> "ModeExpression":
        return ModeExpression(self.terms + other.terms)

    def __sub__(self, other: "ModeExpression") -> "ModeExpression":
        return self + other * -1

    def __mul__(self, x) -> "ModeExpression":
        x = Scalar.coerce(x)
        return ModeExpression([ModeTerm(t.coeff * x, t.modes, t.summed) for t in self.terms])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def compose(self, other: "ModeExpression") -> "ModeExpression":
        """The product self . other; summed terms may only appear on the right."""
        out = []
        for t1 in self.terms:
            if t1.summed:
                raise ValueError("cannot compose with a summed term on the left")
            for t2 in other.terms:
                out.append(ModeTerm(t1.coeff * t2.coeff, t1.modes + t2.modes, t2.summed))
        return ModeExpression(out)

    def named(self, name: str) -> "ModeExpression":
        return ModeExpression(self.terms, name)

    def __str__(self):
        parts = []
        for t in self.terms:
            body = " ".join(
                f"{md.state}t^({md.a}{'+s' if md.b == 1 else '-s' if md.b == -1 else ''})"
                for md in t.modes) or "1"
            parts.append(f"({t.coeff}){' SUM_s ' if t.summed else ' '}{body}")
        return " + ".join(parts) or "0"


class ModeAction:
    """Applies mode expressions to states of one vertex algebra, with memo tables."""

    def __init__(self, va: VertexAlgebra, states: Dict[str, State]):
        self.va = va
        self.states = states
        self._wt = {k: (v.weight() if v else 0) for k, v in states.items()}
        self._mode: Dict[Tuple[str, int, Word], Terms] = {}
        self._expr: Dict[Tuple[str, Word], Terms] = {}
        self.max_sum_index = 0

    def mode_word(self, key: str, a: int, w: Word) -> Terms:
        """``(states[key])_(a)`` on the word w."""
        memo = (key, a, w)
        hit = self._mode.get(memo)
        if hit is not None:
            return hit
        out: Terms = {}
        va = self.va
        for (wu, mu), cu in self.states[key].terms.items():
            for (wr, mr), cr in va.nth(wu, a, w).items():
                _acc(out, (wr, _mono_mul(mu, mr)), cu * cr)
        self._mode[memo] = out
        return out

    def mode_terms(self, key: str, a: int, terms: Terms) -> Terms:
        out: Terms = {}
        for (w, mono), c in terms.items():
            for (w2, m2), c2 in self.mode_word(key, a, w).items():
                _acc(out, (w2, _mono_mul(mono, m2)), c * c2)
        return out

    def _product(self, modes: Sequence[Mode], s: int, w: Word) -> Terms:
        last = modes[-1]
        cur = self.mode_word(last.state, last.a + last.b * s, w)
        for md in reversed(modes[:-1]):
            if not cur:
                break
            cur = self.mode_terms(md.state, md.a + md.b * s, cur)
        return cur

    def term_word(self, term: ModeTerm, w: Word) -> Terms:
        if not term.modes:
            return {(w, ONE): 1}
        if not term.summed:
            return self._product(term.modes, 0, w)
        out: Terms = {}
        last = term.modes[-1]
        # (u)_(k) w = 0 for k >= wt(u) + wt(w)
        stop = self._wt[last.state] + self.va.word_weight(w) - last.a
        for s in range(max(stop, 0)):
            for k, c in self._product(term.modes, s, w).items():
                _acc(out, k, c)
            self.max_sum_index = max(self.max_sum_index, s)
        return out

    def expr_word(self, expr: ModeExpression, w: Word) -> Terms:
        memo = (expr.name, w) if expr.name else None
        if memo is not None:
            hit = self._expr.get(memo)
            if hit is not None:
                return hit
        out: Terms = {}
        for t in expr.terms:
            res = self.term_word(t, w)
            if not res:
                continue
            for (w2, m2), c2 in res.items():
                for mono, cc in t.coeff.terms.items():
                    _acc(out, (w2, _mono_mul(m2, mono)), cc * c2)
        if memo is not None:
            self._expr[memo] = out
        return out

    def apply_terms(self, expr: ModeExpression, terms: Terms) -> Terms:
        out: Terms = {}
        for (w, mono), c in terms.items():
            for (w2, m2), c2 in self.expr_word(expr, w).items():
                _acc(out, (w2, _mono_mul(mono, m2)), c * c2)
        return out

    def apply(self, expr: ModeExpression, v: State) -> State:
        out = State(self.va)
        out.terms = self.apply_terms(expr, v.terms)
        return out


def apply_expression(action: ModeAction, expr: ModeExpression, v: State) -> State:
    return action.apply(expr, v)


# ---------------------------------------------------------------------------
# operator trees


class Op:
    parity: int = 0

    def __add__(self, other: "Op") -> "Op":
        return Lin(((Scalar.const(1), self), (Scalar.const(1), other)))

    def __sub__(self, other: "Op") -> "Op":
        return Lin(((Scalar.const(1), self), (Scalar.const(-1), other)))

    def __mul__(self, x) -> "Op":
        return Lin(((Scalar.coerce(x), self),))

    __rmul__ = __mul__


class Gen(Op):
    def __init__(self, key: GenKey, parity: int):
        self.key = key
        self.parity = parity

    def __str__(self):
        return key_str(self.key)


class Ident(Op):
    def __str__(self):
        return "1"


class Lin(Op):
    def __init__(self, terms: Sequence[Tuple[Scalar, Op]]):
        self.terms = tuple((Scalar.coerce(c), o) for c, o in terms if Scalar.coerce(c))
        self.parity = self.terms[0][1].parity if self.terms else 0

    def __str__(self):
        return " + ".join(f"({c}){o}" for c, o in self.terms) or "0"


class Comp(Op):
    def __init__(self, a: Op, b: Op):
        self.a, self.b = a, b
        self.parity = (a.parity + b.parity) % 2

    def __str__(self):
        return f"{self.a}.{self.b}"


class Comm(Op):
    """Super commutator ab - (-1)^{p(a)p(b)} ba."""

    def __init__(self, a: Op, b: Op):
        self.a, self.b = a, b
        self.parity = (a.parity + b.parity) % 2

    def __str__(self):
        return f"[{self.a}, {self.b}]"


class Anti(Op):
    """ab + ba, independent of parity."""

    def __init__(self, a: Op, b: Op):
        self.a, self.b = a, b
        self.parity = (a.parity + b.parity) % 2

    def __str__(self):
        return f"{{{self.a}, {self.b}}}"


ZERO = Lin(())


def _lin_terms(out: Terms, terms: Terms, coeff: Scalar) -> None:
    for (w, mono), c in terms.items():
        for m2, c2 in coeff.terms.items():
            _acc(out, (w, _mono_mul(mono, m2)), c * c2)


class Evaluator:
    """Evaluates operator trees through a generator -> ModeExpression table."""

    def __init__(self, action: ModeAction, images: Dict[GenKey, ModeExpression]):
        self.action = action
        self.images = {k: v.named(key_str(k)) for k, v in images.items()}

    def run(self, op: Op, terms: Terms) -> Terms:
        if not terms:
            return {}
        if isinstance(op, Gen):
            return self.action.apply_terms(self.images[op.key], terms)
        if isinstance(op, Ident):
            return dict(terms)
        if isinstance(op, Lin):
            out: Terms = {}
            for c, o in op.terms:
                _lin_terms(out, self.run(o, terms), c)
            return out
        if isinstance(op, Comp):
            return self.run(op.a, self.run(op.b, terms))
        if isinstance(op, (Comm, Anti)):
            ab = self.run(op.a, self.run(op.b, terms))
            ba = self.run(op.b, self.run(op.a, terms))
            sg = 1 if isinstance(op, Anti) else -(-1) ** (op.a.parity * op.b.parity)
            out = dict(ab)
            for k, v in ba.items():
                _acc(out, k, sg * v)
            return out
        raise TypeError(f"unknown operator node {op!r}")


# ---------------------------------------------------------------------------
# relations


@dataclass
class Relation:
    id: str
    ref: str
    lhs: Op
    rhs: Op

    def residual_op(self) -> Op:
        return self.lhs - self.rhs


def _pm(sign: str) -> int:
    return 1 if sign == "+" else -1


def ad_power(x: Op, y: Op, k: int) -> Op:
    for _ in range(k):
        y = Comm(x, y)
    return y


def prop_relations(yd: YangianData, gen: Callable[[GenKey], Op], eq29: str = "cartan") -> List[Relation]:
    """The H/X presentation (super, or its non-super analogue when n = 0).

    ``eq29`` picks the anticommutator coefficient of Eq2.9: "printed" is
    +-(-1)^{p(N)} hbar/2 (+-hbar/2 when n = 0), "cartan" is +-a_{0,N-1} hbar/2,
    the same pattern as the generic Eq2.8.
    """
    if eq29 not in EQ29_READINGS:
        raise ValueError(f"unknown Eq2.9 reading {eq29!r}")
    N = yd.N
    hb2 = yd.hbar * Fraction(1, 2)
    sN = yd.sign(N)
    special = {(0, N - 1), (N - 1, 0)}
    rels: List[Relation] = []

    def H(i, r):
        return gen(("H", i, r))

    def X(sg, i, r):
        return gen(("X" + sg, i, r))

    def Ht(i):
        return H(i, 1) - hb2 * Comp(H(i, 0), H(i, 0))

    keys_h = [(i, r) for r in (0, 1) for i in range(N)]
    for x1 in range(len(keys_h)):
        for x2 in range(x1 + 1, len(keys_h)):
            (i, r), (j, s) = keys_h[x1], keys_h[x2]
            rels.append(Relation(f"Eq2.1:H{i},{r}:H{j},{s}", "Eq2.1", Comm(H(i, r), H(j, s)), ZERO))
    for i in range(N):
        for j in range(N):
            d = 1 if i == j else 0
            rels.append(Relation(f"Eq2.2:{i},{j}", "Eq2.2", Comm(X("+", i, 0), X("-", j, 0)), d * H(i, 0)))
            rels.append(Relation(f"Eq2.3a:{i},{j}", "Eq2.3", Comm(X("+", i, 1), X("-", j, 0)), d * H(i, 1)))
            rels.append(Relation(f"Eq2.3b:{i},{j}", "Eq2.3", Comm(X("+", i, 0), X("-", j, 1)), d * H(i, 1)))
    for sg in "+-":
        e = _pm(sg)
        for i in range(N):
            for j in range(N):
                a = yd.a(i, j)
                for r in (0, 1):
                    rels.append(Relation(f"Eq2.4{sg}:{i},{j},{r}", "Eq2.4",
                                         Comm(H(i, 0), X(sg, j, r)), (e * a) * X(sg, j, r)))
                if (i, j) not in special:
                    rels.append(Relation(f"Eq2.5{sg}:{i},{j}", "Eq2.5",
                                         Comm(Ht(i), X(sg, j, 0)), (e * a) * X(sg, j, 1)))
                    lhs = Comm(X(sg, i, 1), X(sg, j, 0)) - Comm(X(sg, i, 0), X(sg, j, 1))
                    rhs = (hb2 * (e * a)) * Anti(X(sg, i, 0), X(sg, j, 0))
                    rels.append(Relation(f"Eq2.8{sg}:{i},{j}", "Eq2.8", lhs, rhs))
        rels.append(Relation(f"Eq2.6{sg}", "Eq2.6", Comm(Ht(0), X(sg, N - 1, 0)),
                             (-e * sN) * (X(sg, N - 1, 1) - yd.shift * X(sg, N - 1, 0))))
        rels.append(Relation(f"Eq2.7{sg}", "Eq2.7", Comm(Ht(N - 1), X(sg, 0, 0)),
                             (-e * sN) * (X(sg, 0, 1) + yd.shift * X(sg, 0, 0))))
        lhs = Comm(X(sg, 0, 1), X(sg, N - 1, 0)) - Comm(X(sg, 0, 0), X(sg, N - 1, 1))
        anti = sN if eq29 == "printed" else yd.a(0, N - 1)
        rhs = (hb2 * (e * anti)) * Anti(X(sg, 0, 0), X(sg, N - 1, 0)) \
            - yd.shift * Comm(X(sg, 0, 0), X(sg, N - 1, 0))
        rels.append(Relation(f"Eq2.9{sg}", "Eq2.9", lhs, rhs))
        for i in range(N):
            for j in range(N):
                if i != j:
                    k = 1 + abs(yd.a(i, j))
                    rels.append(Relation(f"Eq2.10{sg}:{i},{j}", "Eq2.10",
                                         ad_power(X(sg, i, 0), X(sg, j, 0), k), ZERO))
        for i in yd.odd_nodes():
            rels.append(Relation(f"Eq2.11{sg}:{i}", "Eq2.11", Comm(X(sg, i, 0), X(sg, i, 0)), ZERO))
            lhs = Comm(Comm(X(sg, (i - 1) % N, 0), X(sg, i, 0)), Comm(X(sg, i, 0), X(sg, (i + 1) % N, 0)))
            rels.append(Relation(f"Eq2.12{sg}:{i}", "Eq2.12", lhs, ZERO))
    return rels


def psi_translate(yd: YangianData, key: GenKey, gen: Callable[[GenKey], Op],
                  reading: str = "printed") -> Op:
    """Psi of an h/x generator as a linear combination of H/X generators.

    h_{i,0}, x_{i,0} and h_{0,1} map to their capitals; h_{i,1} picks up
    -kappa_i H_{i,0}, and x_{i,1} the matching -kappa_i X_{i,0} so that
    [x+_{i,1}, x-_{i,0}] = h_{i,1} is preserved.
    """
    if reading not in PSI_READINGS:
        raise ValueError(f"unknown Psi reading {reading!r}")
    kind, i, r = key
    if r == 0:
        return gen(key)
    kap = yd.psi_shift(i) * (-1 if reading == "negated" else 1)
    return gen(key) - kap * gen((kind, i, 0))


def theorem_relations(yd: YangianData, gen: Callable[[GenKey], Op]) -> List[Relation]:
    """The h/x minimalistic presentation; ``gen`` supplies h/x generators."""
    N = yd.N
    hb2 = yd.hbar * Fraction(1, 2)
    ed2 = (yd.eps1 - yd.eps2) * Fraction(1, 2)
    rels: List[Relation] = []

    def h(i, r):
        return gen(("H", i, r))

    def x(sg, i, r):
        return gen(("X" + sg, i, r))

    def ht(i):
        return h(i, 1) - hb2 * Comp(h(i, 0), h(i, 0))

    keys_h = [(i, r) for r in (0, 1) for i in range(N)]
    for x1 in range(len(keys_h)):
        for x2 in range(x1 + 1, len(keys_h)):
            (i, r), (j, s) = keys_h[x1], keys_h[x2]
            rels.append(Relation(f"eq2.1:h{i},{r}:h{j},{s}", "eq2.1", Comm(h(i, r), h(j, s)), ZERO))
    for i in range(N):
        for j in range(N):
            d = 1 if i == j else 0
            rels.append(Relation(f"eq2.2:{i},{j}", "eq2.2", Comm(x("+", i, 0), x("-", j, 0)), d * h(i, 0)))
            rels.append(Relation(f"eq2.3a:{i},{j}", "eq2.3", Comm(x("+", i, 1), x("-", j, 0)), d * h(i, 1)))
            rels.append(Relation(f"eq2.3b:{i},{j}", "eq2.3", Comm(x("+", i, 0), x("-", j, 1)), d * h(i, 1)))
    for sg in "+-":
        e = _pm(sg)
        for i in range(N):
            for j in range(N):
                a, mij = yd.a(i, j), yd.mm(i, j)
                for r in (0, 1):
                    rels.append(Relation(f"eq2.4{sg}:{i},{j},{r}", "eq2.4",
                                         Comm(h(i, 0), x(sg, j, r)), (e * a) * x(sg, j, r)))
                rhs = (e * a) * (x(sg, j, 1) - (ed2 * mij) * x(sg, j, 0))
                rels.append(Relation(f"eq2.5{sg}:{i},{j}", "eq2.5", Comm(ht(i), x(sg, j, 0)), rhs))
                lhs = Comm(x(sg, i, 1), x(sg, j, 0)) - Comm(x(sg, i, 0), x(sg, j, 1))
                rhs = (hb2 * (e * a)) * Anti(x(sg, i, 0), x(sg, j, 0)) \
                    - (ed2 * mij) * Comm(x(sg, i, 0), x(sg, j, 0))
                rels.append(Relation(f"eq2.6{sg}:{i},{j}", "eq2.6", lhs, rhs))
                if i != j:
                    k = 1 + abs(a)
                    rels.append(Relation(f"eq2.7{sg}:{i},{j}", "eq2.7",
                                         ad_power(x(sg, i, 0), x(sg, j, 0), k), ZERO))
        for i in yd.odd_nodes():
            rels.append(Relation(f"eq2.8{sg}:{i}", "eq2.8", Comm(x(sg, i, 0), x(sg, i, 0)), ZERO))
            lhs = Comm(Comm(x(sg, (i - 1) % N, 0), x(sg, i, 0)), Comm(x(sg, i, 0), x(sg, (i + 1) % N, 0)))
            rels.append(Relation(f"eq2.9{sg}:{i}", "eq2.9", lhs, ZERO))
    return rels


# ---------------------------------------------------------------------------
# PBW bases


def pbw_basis(va: VertexAlgebra, max_weight: int) -> List[Word]:
    """All PBW words of weight <= max_weight (odd letters at most once)."""
    letters = sorted(va.letter(g, d) for g in range(va.G) for d in range(1, max_weight + 1))
    out: List[Word] = []

    def grow(start: int, word: Tuple[int, ...], wt: int) -> None:
        out.append(word)
        for k in range(start, len(letters)):
            x = letters[k]
            d = va.depth(x)
            if wt + d > max_weight:
                continue
            nxt = k + 1 if va.lpar(x) else k
            grow(nxt, word + (x,), wt + d)

    grow(0, (), 0)
    return out


# ---------------------------------------------------------------------------
# Phi: the Yangian into the mode algebra of the rectangular W-algebra


def phi_parameters(inst: Instance) -> YangianData:
    d = inst.m - inst.n
    e1 = Scalar.alpha() * Fraction(1, d)
    e2 = Scalar.const(-1) - e1
    return YangianData(inst.m, inst.n, e1, e2)


def phi_states(wa: WAlgebra) -> Dict[str, State]:
    N = wa.inst.N
    states: Dict[str, State] = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for r in (1, 2):
                states[f"W{r}[{i},{j}]"] = wa.W(r, i, j)
    return states


def phi_images(wa: WAlgebra, mutate: Optional[str] = None, x01: str = "transposed",
               linear: str = "printed", xp01: str = "negated") -> Dict[GenKey, ModeExpression]:
    """Images of H, X+-, level 0 and 1, as mode expressions in W1/W2 modes.

    The keyword readings select between the printed table and the candidate
    corrections (see PHI_*_READINGS); defaults are the adjudicated ones.
    """
    if xp01 not in PHI_XP01_READINGS:
        raise ValueError(f"unknown X+_(0,1) reading {xp01!r}")
    if x01 not in PHI_X01_READINGS:
        raise ValueError(f"unknown X-_(0,1) reading {x01!r}")
    if linear not in PHI_LINEAR_READINGS:
        raise ValueError(f"unknown linear-term reading {linear!r}")
    inst = wa.inst
    N, l = inst.N, inst.l
    yd = phi_parameters(inst)
    al = Scalar.alpha()
    lal = al * l
    sg = yd.sign
    M = ModeExpression.mode
    S = ModeExpression.series

    def W1(i, j):
        return f"W1[{i},{j}]"

    def W2(i, j):
        return f"W2[{i},{j}]"

    def lin(i) -> Fraction:
        c = yd.linear_coeff(i)
        return -c if linear == "hbar" else c

    img: Dict[GenKey, ModeExpression] = {}
    img[("H", 0, 0)] = M(W1(N, N), 0, sg(N)) - M(W1(1, 1), 0) + ModeExpression.scalar(lal)
    img[("X+", 0, 0)] = M(W1(1, N), 1)
    img[("X-", 0, 0)] = M(W1(N, 1), -1, sg(N))
    for i in range(1, N):
        img[("H", i, 0)] = M(W1(i, i), 0, sg(i)) - M(W1(i + 1, i + 1), 0, sg(i + 1))
        img[("X+", i, 0)] = M(W1(i + 1, i), 0)
        img[("X-", i, 0)] = M(W1(i, i + 1), 0, sg(i))

    # level one, i = 0
    e = M(W2(N, N), 1, sg(N)) - M(W2(1, 1), 1) + M(W1(N, N), 0, al * ((l - 1) * sg(N)))
    e = e - img[("H", 0, 0)] * lal
    e = e + M(W1(N, N), 0, sg(N)).compose(M(W1(1, 1), 0) - ModeExpression.scalar(lal))
    for u in range(1, N + 1):
        e = e + S([(W1(u, N), 0, -1), (W1(N, u), 0, 1)], -sg(N) * sg(u))
        e = e + S([(W1(u, 1), -1, -1), (W1(1, u), 1, 1)], sg(u))
    img[("H", 0, 1)] = e

    lvl = al * (l if mutated(mutate, "phi-x01-alpha") else l - 1)
    e = M(W2(1, N), 2) + M(W1(1, N), 1, lvl) + img[("X+", 0, 0)] * (lal if xp01 == "printed" else -lal)
    for u in range(1, N + 1):
        e = e + S([(W1(u, N), 0, -1), (W1(1, u), 1, 1)], -sg(u))
    img[("X+", 0, 1)] = e

    e = M(W2(N, 1), 0, sg(N)) - img[("X-", 0, 0)] * lal
    for u in range(1, N + 1):
        left = W1(u, 1) if x01 == "transposed" else W1(1, u)
        e = e + S([(left, -1, -1), (W1(N, u), 0, 1)], -sg(N) * sg(u))
    img[("X-", 0, 1)] = e

    for i in range(1, N):
        low = range(1, i + 1)
        high = range(i + 1, N + 1)
        e = M(W2(i, i), 1, sg(i)) - M(W2(i + 1, i + 1), 1, sg(i + 1))
        e = e + img[("H", i, 0)] * lin(i)
        e = e + M(W1(i, i), 0, sg(i) * sg(i + 1)).compose(M(W1(i + 1, i + 1), 0))
        for u in low:
            e = e + S([(W1(u, i), 0, -1), (W1(i, u), 0, 1)], -sg(i) * sg(u))
            e = e + S([(W1(u, i + 1), 0, -1), (W1(i + 1, u), 0, 1)], sg(i + 1) * sg(u))
        for u in high:
            e = e + S([(W1(u, i), -1, -1), (W1(i, u), 1, 1)], -sg(i) * sg(u))
            e = e + S([(W1(u, i + 1), -1, -1), (W1(i + 1, u), 1, 1)], sg(i + 1) * sg(u))
        img[("H", i, 1)] = e

        e = M(W2(i + 1, i), 1) + img[("X+", i, 0)] * lin(i)
        for u in low:
            e = e + S([(W1(u, i), 0, -1), (W1(i + 1, u), 0, 1)], -sg(u))
        for u in high:
            e = e + S([(W1(u, i), -1, -1), (W1(i + 1, u), 1, 1)], -sg(u))
        img[("X+", i, 1)] = e

        e = M(W2(i, i + 1), 1, sg(i)) + img[("X-", i, 0)] * lin(i)
        for u in low:
            e = e + S([(W1(u, i + 1), 0, -1), (W1(i, u), 0, 1)], -sg(i) * sg(u))
        for u in high:
            e = e + S([(W1(u, i + 1), -1, -1), (W1(i, u), 1, 1)], -sg(i) * sg(u))
        img[("X-", i, 1)] = e
    return img


# ---------------------------------------------------------------------------
# the evaluation map into the completed enveloping algebra of gl^(m|n)^str


def ev_parameters(m: int, n: int, sample: Optional[Tuple[int, int]] = None) -> Tuple[YangianData, Scalar]:
    """(Yangian data, ctilde).  Symbolic: e1 = alpha/(m-n), hbar = -1, ctilde = alpha."""
    if sample is None:
        e1 = Scalar.alpha() * Fraction(1, m - n)
        e2 = Scalar.const(-1) - e1
        ct = Scalar.alpha()
    else:
        e1, e2 = Scalar.const(sample[0]), Scalar.const(sample[1])
        ct = Scalar.const(Fraction((n - m) * sample[0], sample[0] + sample[1]))
    return YangianData(m, n, e1, e2), ct


def ev_images(yd: YangianData, ct: Scalar, mutate: Optional[str] = None,
              linear: str = "negated") -> Dict[GenKey, ModeExpression]:
    """ev of the level 0 and 1 generators.

    ``linear`` selects the sign of the (i - 2 d(i > m)(i - m)) hbar / 2 terms:
    "negated" is the one compatible with the relations (and with Phi).
    """
    if linear not in EV_LINEAR_READINGS:
        raise ValueError(f"unknown linear-term reading {linear!r}")
    N = yd.N
    hb = yd.hbar
    sg = yd.sign
    M = ModeExpression.mode
    S = ModeExpression.series

    def E(i, j):
        return f"E[{i},{j}]"

    def h(i):
        if i == 0:
            return M(E(N, N), 0, sg(N)) - M(E(1, 1), 0) + ModeExpression.scalar(ct)
        return M(E(i, i), 0, sg(i)) - M(E(i + 1, i + 1), 0, sg(i + 1))

    img: Dict[GenKey, ModeExpression] = {}
    img[("X+", 0, 0)] = M(E(N, 1), 1)
    img[("X-", 0, 0)] = M(E(1, N), -1, sg(N))
    for i in range(N):
        img[("H", i, 0)] = h(i)
    for i in range(1, N):
        img[("X+", i, 0)] = M(E(i, i + 1), 0)
        img[("X-", i, 0)] = M(E(i + 1, i), 0, sg(i))

    e = h(0) * (hb * ct)
    e = e + M(E(N, N), 0, hb * -sg(N)).compose(M(E(1, 1), 0) - ModeExpression.scalar(ct))
    for k in range(1, N + 1):
        e = e + S([(E(N, k), 0, -1), (E(k, N), 0, 1)], hb * (sg(N) * sg(k)))
        e = e + S([(E(1, k), -1, -1), (E(k, 1), 1, 1)], hb * -sg(k))
    img[("H", 0, 1)] = e

    e = img[("X+", 0, 0)] * (hb * ct)
    for k in range(1, N + 1):
        e = e + S([(E(N, k), 0, -1), (E(k, 1), 1, 1)], hb * sg(k))
    img[("X+", 0, 1)] = e

    e = img[("X-", 0, 0)] * (hb * ct)
    for k in range(1, N + 1):
        e = e + S([(E(1, k), -1, -1), (E(k, N), 0, 1)], hb * (sg(N) * sg(k)))
    img[("X-", 0, 1)] = e

    dbl = 2 if mutated(mutate, "ev-h1-hbar") else 1
    for i in range(1, N):
        lc = hb * yd.linear_coeff(i) * (-1 if linear == "negated" else 1)
        low = range(1, i + 1)
        high = range(i + 1, N + 1)
        pe = sg(i) * sg(i + 1)
        e = h(i) * lc + M(E(i, i), 0, hb * (-pe * dbl)).compose(M(E(i + 1, i + 1), 0))
        for k in low:
            e = e + S([(E(i, k), 0, -1), (E(k, i), 0, 1)], hb * (sg(i) * sg(k)))
            e = e + S([(E(i + 1, k), 0, -1), (E(k, i + 1), 0, 1)], hb * (-sg(i + 1) * sg(k)))
        for k in high:
            e = e + S([(E(i, k), -1, -1), (E(k, i), 1, 1)], hb * (sg(i) * sg(k)))
            e = e + S([(E(i + 1, k), -1, -1), (E(k, i + 1), 1, 1)], hb * (-sg(i + 1) * sg(k)))
        img[("H", i, 1)] = e

        e = img[("X+", i, 0)] * lc
        for k in low:
            e = e + S([(E(i, k), 0, -1), (E(k, i + 1), 0, 1)], hb * sg(k))
        for k in high:
            e = e + S([(E(i, k), -1, -1), (E(k, i + 1), 1, 1)], hb * sg(k))
        img[("X+", i, 1)] = e

        e = img[("X-", i, 0)] * lc
        for k in low:
            e = e + S([(E(i + 1, k), 0, -1), (E(k, i), 0, 1)], hb * (sg(i) * sg(k)))
        for k in high:
            e = e + S([(E(i + 1, k), -1, -1), (E(k, i), 1, 1)], hb * (sg(i) * sg(k)))
        img[("X-", i, 1)] = e
    return img


def ev_states(va: VertexAlgebra, N: int) -> Dict[str, State]:
    out = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            g = va.alg.gen_id(UNIT, i, j)
            out[f"E[{i},{j}]"] = State(va, {((va.letter(g, 1),), ONE): 1})
    return out


# ---------------------------------------------------------------------------
# verification


class YangianCheck:
    """Relation checker: images + engine + basis of bounded weight."""

    def __init__(self, yd: YangianData, va: VertexAlgebra, states: Dict[str, State],
                 images: Dict[GenKey, ModeExpression], cutoff: int, instance: str = ""):
        self.yd = yd
        self.va = va
        self.action = ModeAction(va, states)
        self.ev = Evaluator(self.action, images)
        self.cutoff = cutoff
        self.basis = pbw_basis(va, cutoff)
        self.instance = instance

    def gen(self, key: GenKey) -> Op:
        return Gen(key, self.yd.gen_parity(key))

    def psi_gen(self, key: GenKey, reading: str = "printed") -> Op:
        return psi_translate(self.yd, key, self.gen, reading)

    def verify(self, rel: Relation) -> CheckReport:
        t0 = time.perf_counter()
        op = rel.residual_op()
        for w in self.basis:
            res = self.ev.run(op, {(w, ONE): 1})
            if res:
                st = State(self.va)
                st.terms = res
                ms = (time.perf_counter() - t0) * 1000
                v = State(self.va, {(w, ONE): 1})
                return CheckReport(rel.id, rel.ref, FAIL, self.instance, st.to_json()[:20], ms,
                                   detail=f"first failing basis state {v.word_str(w)}")
        return CheckReport(rel.id, rel.ref, PASS, self.instance, None, (time.perf_counter() - t0) * 1000)

    def verify_all(self, rels: Sequence[Relation], suite: str) -> SuiteResult:
        out = SuiteResult(suite)
        for r in rels:
            out.checks.append(self.verify(r))
        out.notes.append(f"{len(self.basis)} basis states of weight <= {self.cutoff}")
        return out

    def prop(self, eq29: str = "cartan") -> List[Relation]:
        return prop_relations(self.yd, self.gen, eq29=eq29)

    def theorem(self, psi: str = "printed", mm: str = "swapped") -> List[Relation]:
        yd = self.yd
        if mm != yd.mm_reading:
            yd = YangianData(yd.m, yd.n, yd.eps1, yd.eps2, mm)
        return theorem_relations(yd, lambda k: psi_translate(yd, k, self.gen, psi))


def phi_check(wa: WAlgebra, cutoff: int, mutate: Optional[str] = None, **readings) -> YangianCheck:
    inst = wa.inst
    inst.check_yangian()
    yd = phi_parameters(inst)
    images = phi_images(wa, mutate=mutate, **readings)
    return YangianCheck(yd, wa.va, phi_states(wa), images, cutoff, str(inst))


def ev_check(m: int, n: int, cutoff: int, sample: Optional[Tuple[int, int]] = None,
             mutate: Optional[str] = None, linear: str = "negated") -> YangianCheck:
    yd, ct = ev_parameters(m, n, sample)
    va = VertexAlgebra(gl_str_algebra(m, n, ct))
    images = ev_images(yd, ct, mutate=mutate, linear=linear)
    return YangianCheck(yd, va, ev_states(va, yd.N), images, cutoff, f"gl({m}|{n})")


def iter_failures(result: SuiteResult) -> Iterator[CheckReport]:
    return iter(result.failures())
