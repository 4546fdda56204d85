"""Universal affine vertex superalgebra over a :class:`LieSuperalgebra`.

A *letter* ``g[-d]`` (generator g, creation depth d >= 1) is encoded as the
integer ``g - d*G``; ascending integer order is therefore depth descending,
then generator id.  A PBW word is a non-decreasing tuple of letters and
stands for ``x1 x2 ... xk |0>``.  States are flat dicts
``{(word, mono): coeff}`` with ``mono = (a, b)`` meaning ``alpha^a c^b``.

All recursive primitives (straightening, mode action, n-th products) are
memoized on words, so repeated products inside a suite share work.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .foundation import ONE, Coeff, Mono, Scalar, format_poly, normalize_coeff
from .superalgebra import LieSuperalgebra

Word = Tuple[int, ...]
Terms = Dict[Tuple[Word, Mono], Coeff]
WordComb = Dict[Word, Coeff]

ENGINE_VERSION = "1.0"


def gbinom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k >= 0."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    # C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * comb(k - n - 1, k)


def _acc(out: Dict, key, v) -> None:
    nv = out.get(key, 0) + v
    if nv:
        out[key] = nv
    else:
        del out[key]


def _mono_mul(a: Mono, b: Mono) -> Mono:
    return (a[0] + b[0], a[1] + b[1])


class VertexAlgebra:
    """Engine for V^kappa(g): memo tables and primitive operations on words."""

    def __init__(self, alg: LieSuperalgebra):
        self.alg = alg
        self.G = alg.G
        self.par = alg.par
        self.br = alg.br
        self.form = alg.form
        self._insert: Dict[Tuple[int, Word], WordComb] = {}
        self._act: Dict[Tuple[int, int, Word], Terms] = {}
        self._nth: Dict[Tuple[Word, int, Word], Terms] = {}
        self._wt: Dict[Word, int] = {}
        self.translate_shift = 0  # nonzero only in mutation runs

    # -- letters -------------------------------------------------------
    def letter(self, g: int, depth: int) -> int:
        if depth < 1:
            raise ValueError("creation letters need depth >= 1")
        return g - depth * self.G

    def depth(self, x: int) -> int:
        return -(x // self.G)

    def gen(self, x: int) -> int:
        return x % self.G

    def lpar(self, x: int) -> int:
        return self.par[x % self.G]

    def word_weight(self, w: Word) -> int:
        wt = self._wt.get(w)
        if wt is None:
            G = self.G
            wt = -sum(x // G for x in w)
            self._wt[w] = wt
        return wt

    def word_parity(self, w: Word) -> int:
        par, G = self.par, self.G
        return sum(par[x % G] for x in w) & 1

    # -- straightening ------------------------------------------------
    def insert(self, x: int, w: Word) -> WordComb:
        """Normal-order the product x . w (x a letter, w a PBW word)."""
        if not w or x < w[0]:
            return {(x,) + w: 1}
        key = (x, w)
        hit = self._insert.get(key)
        if hit is not None:
            return hit
        G, par = self.G, self.par
        y = w[0]
        rest = w[1:]
        out: WordComb = {}
        gx, gy = x % G, y % G
        dsum = -(x // G) - (y // G)
        if x == y:
            if par[gx]:
                # odd square: x x = 1/2 [x, x]
                for k, c in self.br[gx][gx]:
                    for ww, cc in self.insert(k - dsum * G, rest).items():
                        _acc(out, ww, Fraction(c * cc, 2))
            else:
                out[(x,) + w] = 1
        else:
            sgn = -1 if (par[gx] and par[gy]) else 1
            for w1, c1 in self.insert(x, rest).items():
                for w2, c2 in self.insert(y, w1).items():
                    _acc(out, w2, sgn * c1 * c2)
            for k, c in self.br[gx][gy]:
                for w1, c1 in self.insert(k - dsum * G, rest).items():
                    _acc(out, w1, c * c1)
        out = {k: normalize_coeff(v) for k, v in out.items()}
        self._insert[key] = out
        return out

    def normal_order(self, letters: Sequence[int]) -> WordComb:
        """Normal-order an arbitrary sequence x1 x2 ... xk |0>."""
        cur: WordComb = {(): 1}
        for x in reversed(letters):
            nxt: WordComb = {}
            for w, c in cur.items():
                for w2, c2 in self.insert(x, w).items():
                    _acc(nxt, w2, c * c2)
            cur = nxt
        return cur

    def insert_terms(self, x: int, terms: Terms) -> Terms:
        out: Terms = {}
        for (w, mono), c in terms.items():
            for w2, c2 in self.insert(x, w).items():
                _acc(out, (w2, mono), c * c2)
        return out

    # -- generator modes -----------------------------------------------
    def act(self, g: int, n: int, w: Word) -> Terms:
        """g_(n) acting on the word w, for n >= 0."""
        if not w or n > self.word_weight(w):
            return {}
        key = (g, n, w)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        G, par = self.G, self.par
        y = w[0]
        rest = w[1:]
        h = y % G
        s = -(y // G)
        out: Terms = {}
        sgn = -1 if (par[g] and par[h]) else 1
        for (w1, mono), c1 in self.act(g, n, rest).items():
            for w2, c2 in self.insert(y, w1).items():
                _acc(out, (w2, mono), sgn * c1 * c2)
        for k, c in self.br[g][h]:
            if n - s < 0:
                for w1, c1 in self.insert(k - (s - n) * G, rest).items():
                    _acc(out, (w1, ONE), c * c1)
            else:
                for key1, c1 in self.act(k, n - s, rest).items():
                    _acc(out, key1, c * c1)
        if n == s and n:
            f = self.form[g][h]
            if f:
                for mono, fc in f.items():
                    _acc(out, (rest, mono), n * fc)
        self._act[key] = out
        return out

    def gen_mode(self, g: int, n: int, w: Word) -> Terms:
        """g_(n) on the word w for any integer n."""
        if n >= 0:
            return self.act(g, n, w)
        return {(w2, ONE): c for w2, c in self.insert(g + n * self.G, w).items()}

    # -- n-th products -------------------------------------------------
    def nth(self, u: Word, n: int, v: Word) -> Terms:
        """u_(n) v on PBW words."""
        if not u:
            return {(v, ONE): 1} if n == -1 else {}
        wu = self.word_weight(u)
        wv = self.word_weight(v)
        if n >= wu + wv:
            return {}
        key = (u, n, v)
        hit = self._nth.get(key)
        if hit is not None:
            return hit
        G = self.G
        a = u[0]
        ga = a % G
        s = -(a // G)
        w = u[1:]
        out: Terms = {}
        if not w:
            # (a[-s]|0>)_(n) = (-1)^{s-1} C(n, s-1) a_(n-s+1)
            b = gbinom(n, s - 1)
            if b:
                b *= -1 if (s - 1) & 1 else 1
                for k, c in self.gen_mode(ga, n - s + 1, v).items():
                    _acc(out, k, b * c)
        else:
            ww = self.word_weight(w)
            pw = self.word_parity(w)
            sgn2 = -1 if ((s & 1) ^ (self.par[ga] & pw)) else 1
            jmax = max(ww + wv - n - 1, wv)
            for j in range(jmax + 1):
                bj = comb(s + j - 1, j)
                if n + j < ww + wv:
                    inner = self.nth(w, n + j, v)
                    if inner:
                        x = a - j * G
                        for (w1, mono), c1 in inner.items():
                            for w2, c2 in self.insert(x, w1).items():
                                _acc(out, (w2, mono), bj * c1 * c2)
                if j <= wv:
                    av = self.act(ga, j, v)
                    for (w1, m1), c1 in av.items():
                        for (w2, m2), c2 in self.nth(w, n - s - j, w1).items():
                            _acc(out, (w2, _mono_mul(m1, m2)), -sgn2 * bj * c1 * c2)
        self._nth[key] = out
        return out

    # -- translation ----------------------------------------------------
    def translate_word(self, w: Word) -> WordComb:
        out: WordComb = {}
        G = self.G
        for i, x in enumerate(w):
            d = -(x // G) + self.translate_shift
            seq = w[:i] + (x - G,) + w[i + 1:]
            for w2, c2 in self.normal_order(seq).items():
                _acc(out, w2, d * c2)
        return out

    def clear(self) -> None:
        self._insert.clear()
        self._act.clear()
        self._nth.clear()
        self._wt.clear()

    def cache_sizes(self) -> Dict[str, int]:
        return {"insert": len(self._insert), "act": len(self._act), "nth": len(self._nth)}


class State:
    """A Scalar-linear combination of PBW words of a :class:`VertexAlgebra`."""

    __slots__ = ("va", "terms")

    def __init__(self, va: VertexAlgebra, terms: Optional[Mapping[Tuple[Word, Mono], Coeff]] = None):
        self.va = va
        self.terms: Terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = normalize_coeff(v)

    # -- constructors ---------------------------------------------------
    @classmethod
    def vacuum(cls, va: VertexAlgebra) -> "State":
        return cls(va, {((), ONE): 1})

    @classmethod
    def zero(cls, va: VertexAlgebra) -> "State":
        return cls(va)

    @classmethod
    def from_letters(cls, va: VertexAlgebra, letters: Sequence[Tuple[int, int]], coeff=1) -> "State":
        """Normal-ordered ``g1[-d1] g2[-d2] ... |0>`` scaled by ``coeff``."""
        codes = [va.letter(g, d) for g, d in letters]
        out = cls(va, {(w, ONE): c for w, c in va.normal_order(codes).items()})
        return out * coeff

    @classmethod
    def from_word_comb(cls, va: VertexAlgebra, comb_: Mapping[Word, Coeff]) -> "State":
        return cls(va, {(w, ONE): c for w, c in comb_.items()})

    # -- linear structure -------------------------------------------------
    def copy(self) -> "State":
        s = State(self.va)
        s.terms = dict(self.terms)
        return s

    def __add__(self, other: "State") -> "State":
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        s = State(self.va)
        s.terms = out
        return s

    def __sub__(self, other: "State") -> "State":
        return self + other * -1

    def __neg__(self) -> "State":
        return self * -1

    def __mul__(self, x) -> "State":
        if isinstance(x, State):
            raise TypeError("use nth(u, -1, v) for the normally ordered product")
        if isinstance(x, Scalar):
            out: Terms = {}
            for (w, mono), c in self.terms.items():
                for m2, c2 in x.terms.items():
                    _acc(out, (w, _mono_mul(mono, m2)), c * c2)
            s = State(self.va)
            s.terms = out
            return s
        x = normalize_coeff(x)
        s = State(self.va)
        if x:
            s.terms = {k: normalize_coeff(v * x) for k, v in self.terms.items()}
        return s

    __rmul__ = __mul__

    def add_terms(self, terms: Mapping, factor: Coeff = 1, mono: Mono = ONE) -> None:
        for (w, m), c in terms.items():
            _acc(self.terms, (w, _mono_mul(m, mono)), c * factor)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, State):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    # -- derived data ---------------------------------------------------
    def words(self) -> Dict[Word, Scalar]:
        grouped: Dict[Word, Dict[Mono, Coeff]] = {}
        for (w, mono), c in self.terms.items():
            grouped.setdefault(w, {})[mono] = c
        return {w: Scalar(t) for w, t in grouped.items()}

    def weight(self) -> int:
        if not self.terms:
            return 0
        return max(self.va.word_weight(w) for w, _ in self.terms)

    def weights(self) -> set:
        return {self.va.word_weight(w) for w, _ in self.terms}

    def parities(self) -> set:
        return {self.va.word_parity(w) for w, _ in self.terms}

    def parity(self) -> int:
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("state is not parity-homogeneous")
        return ps.pop() if ps else 0

    def specialize_c0(self) -> "State":
        return State(self.va, {k: v for k, v in self.terms.items() if k[0][1] == 0})

    def coefficient(self, word: Word) -> Scalar:
        return Scalar({m: c for (w, m), c in self.terms.items() if w == word})

    # -- vertex operations --------------------------------------------------
    def nth(self, n: int, other: "State") -> "State":
        return nth_product(self, n, other)

    def translate(self) -> "State":
        return translate(self)

    # -- display ---------------------------------------------------------
    def word_str(self, w: Word) -> str:
        if not w:
            return "|0>"
        va = self.va
        parts = [f"{va.alg.label(va.gen(x))}[-{va.depth(x)}]" for x in w]
        return " ".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for w, sc in sorted(self.words().items()):
            chunks.append(f"({format_poly(sc.terms)}) {self.word_str(w)}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"State<{len(self.terms)} terms>"

    # -- serialization -----------------------------------------------------
    def to_json(self) -> List[dict]:
        va = self.va
        out = []
        for w, sc in sorted(self.words().items()):
            letters = []
            for x in w:
                g = va.alg.gens[va.gen(x)]
                letters.append({"kind": g.kind, "row": g.row, "col": g.col, "depth": va.depth(x)})
            out.append({"coefficient": sc.to_json(), "word": letters})
        return out

    @classmethod
    def from_json(cls, va: VertexAlgebra, data: Iterable[Mapping]) -> "State":
        st = cls(va)
        for term in data:
            codes = []
            for L in term["word"]:
                g = va.alg.gen_id(L["kind"], int(L["row"]), int(L["col"]))
                codes.append(va.letter(g, int(L["depth"])))
            w = tuple(codes)
            if list(w) != sorted(w):
                raise ValueError("serialized word is not in canonical order")
            sc = Scalar.from_json(term["coefficient"])
            for mono, c in sc.terms.items():
                _acc(st.terms, (w, mono), c)
        return st


def nth_product(u: State, n: int, v: State) -> State:
    va = u.va
    out = State(va)
    acc = out.terms
    for (wu, mu), cu in u.terms.items():
        for (wv, mv), cv in v.terms.items():
            res = va.nth(wu, n, wv)
            if not res:
                continue
            m0 = _mono_mul(mu, mv)
            c0 = cu * cv
            for (w, m), c in res.items():
                _acc(acc, (w, _mono_mul(m, m0)), c0 * c)
    return out


def translate(u: State) -> State:
    va = u.va
    out = State(va)
    for (w, mono), c in u.terms.items():
        for w2, c2 in va.translate_word(w).items():
            _acc(out.terms, (w2, mono), c * c2)
    return out


def translate_power(u: State, k: int, divided: bool = False) -> State:
    """Apply the translation k times; optionally divide by k!."""
    for _ in range(k):
        u = translate(u)
    if divided and k > 1:
        u = u * Fraction(1, factorial(k))
    return u


def mode_apply(u: State, a: int, v: State) -> State:
    """u t^a acting on v, i.e. u_(a) v."""
    return nth_product(u, a, v)


def mode_commutator(u: State, a: int, v: State, b: int) -> List[Tuple[State, int]]:
    """[u t^a, v t^b] as the finite list of (u_(r) v * C(a, r), a + b - r)."""
    out: List[Tuple[State, int]] = []
    wmax = u.weight() + v.weight()
    for r in range(0, max(wmax, 0)):
        c = gbinom(a, r)
        if not c:
            continue
        prod = nth_product(u, r, v)
        if prod:
            out.append((prod * c, a + b - r))
    return out


def single(va: VertexAlgebra, kind: str, row: int, col: int, depth: int = 1, coeff=1) -> State:
    g = va.alg.gen_id(kind, row, col)
    return State(va, {((va.letter(g, depth),), ONE): coeff})
