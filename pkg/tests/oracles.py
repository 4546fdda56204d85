"""Reference implementations that share no code path with the engine.

* ``matrix_bracket``: brackets of matrix units computed from explicit
  supermatrices (lists of lists), used to validate the structure-constant
  tables.
* ``ModeOracle``: states as raw mode words ``x1 x2 ... xk |0>`` with
  ``x = (generator, mode)``.  Straightening is a naive bubble sort that
  applies [a t^m, b t^k] = [a,b] t^{m+k} + m d_{m+k,0} kappa(a,b) to the
  first out-of-order pair; n-th products use the mode expansion of the
  normally ordered field :(d^{(s-1)} a)(z) Y(w,z):.  Only the bracket and
  form tables of the Lie superalgebra are read from the package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from rectw.foundation import Scalar

RawWord = Tuple[Tuple[int, int], ...]


def supermatrix_unit(size: int, A: int, B: int) -> List[List[int]]:
    M = [[0] * size for _ in range(size)]
    M[A - 1][B - 1] = 1
    return M


def matmul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def matrix_bracket(X, Y, px: int, py: int):
    """Super commutator XY - (-1)^{px py} YX of explicit matrices."""
    s = -1 if (px * py) % 2 else 1
    XY, YX = matmul(X, Y), matmul(Y, X)
    n = len(X)
    return [[XY[i][j] - s * YX[i][j] for j in range(n)] for i in range(n)]


def matrix_to_units(M) -> Dict[Tuple[int, int], int]:
    return {(i + 1, j + 1): v for i, row in enumerate(M) for j, v in enumerate(row) if v}


def binom(n: int, k: int) -> int:
    """Generalized binomial C(n, k) for any integer n, k >= 0."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= n - t
    den = 1
    for t in range(2, k + 1):
        den *= t
    return num // den


def _add(out: Dict, key, val) -> None:
    if not val:
        return
    v = out.get(key)
    v = val if v is None else v + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class ModeOracle:
    """Brute-force vacuum module of the affinization of a LieSuperalgebra."""

    def __init__(self, alg):
        self.alg = alg
        self.G = alg.G

    # ordering: more negative mode first, then generator id
    @staticmethod
    def key(x) -> Tuple[int, int]:
        return (x[1], x[0])

    def parity(self, x) -> int:
        return self.alg.par[x[0]]

    def bracket_terms(self, x, y) -> Dict[RawWord, Scalar]:
        """[x, y] as raw words (single letter or empty word)."""
        (a, m), (b, k) = x, y
        out: Dict[RawWord, Scalar] = {}
        for g, c in self.alg.bracket(a, b).items():
            _add(out, ((g, m + k),), Scalar.const(c))
        if m + k == 0 and m:
            kap = self.alg.kappa(a, b)
            if kap:
                _add(out, (), kap * m)
        return out

    def straighten(self, state: Dict[RawWord, Scalar]) -> Dict[RawWord, Scalar]:
        """Normal form: creation letters sorted by key, odd letters not repeated."""
        done: Dict[RawWord, Scalar] = {}
        todo = list(state.items())
        while todo:
            w, c = todo.pop()
            if not c:
                continue
            if w and w[-1][1] >= 0:
                continue  # annihilator on the vacuum
            pos = None
            for i in range(len(w) - 1):
                kx, ky = self.key(w[i]), self.key(w[i + 1])
                if kx > ky or (kx == ky and self.parity(w[i])):
                    pos = i
                    break
            if pos is None:
                if any(x[1] >= 0 for x in w):
                    # an annihilator sits left of sorted creations: move it right
                    pos = next(i for i, x in enumerate(w) if x[1] >= 0)
                    if pos == len(w) - 1:
                        continue
                else:
                    _add(done, w, c)
                    continue
            x, y = w[pos], w[pos + 1]
            head, tail = w[:pos], w[pos + 2:]
            if x == y and self.parity(x):
                # x x = (1/2)[x, x] for an odd letter
                for bw, bc in self.bracket_terms(x, y).items():
                    todo.append((head + bw + tail, c * bc * Fraction(1, 2)))
                continue
            s = -1 if self.parity(x) * self.parity(y) else 1
            todo.append((head + (y, x) + tail, c * s))
            for bw, bc in self.bracket_terms(x, y).items():
                todo.append((head + bw + tail, c * bc))
        return done

    def act(self, a: int, m: int, state: Dict[RawWord, Scalar]) -> Dict[RawWord, Scalar]:
        raw = {((a, m),) + w: c for w, c in state.items()}
        return self.straighten(raw)

    def weight(self, w: RawWord) -> int:
        return -sum(x[1] for x in w)

    def state_weight(self, state) -> int:
        return max((self.weight(w) for w in state), default=-1)

    def nth(self, u: RawWord, n: int, v: Dict[RawWord, Scalar]) -> Dict[RawWord, Scalar]:
        """u_(n) v for a normal-ordered creation word u."""
        if not v:
            return {}
        if not u:
            return dict(v) if n == -1 else {}
        (a, m0), w = u[0], u[1:]
        k = -m0 - 1  # u = (d^{(k)} a)_(-1) w
        pa = self.alg.par[a]
        pw = sum(self.alg.par[x[0]] for x in w) % 2
        wt_w, wt_v = self.weight(w), self.state_weight(v)
        out: Dict[RawWord, Scalar] = {}
        # creation part of d^{(k)} a: sum_{j<0} A_(j) (w_(n-j-1) v)
        j = -1
        while n - j - 1 < wt_w + wt_v:
            inner = self.nth(w, n - j - 1, v)
            if inner:
                c = binom(j, k) * (-1) ** k
                if c:
                    for ww, cc in self.act(a, j - k, inner).items():
                        _add(out, ww, cc * c)
            j -= 1
        # annihilation part: (-1)^{pa pw} sum_{j>=0} w_(n-j-1) (A_(j) v)
        sg = -1 if pa * pw else 1
        j = 0
        while j - k <= wt_v:
            c = binom(j, k) * (-1) ** k
            if c:
                av = self.act(a, j - k, v)
                if av:
                    for ww, cc in self.nth(w, n - j - 1, av).items():
                        _add(out, ww, cc * (c * sg))
            j += 1
        return out

    # conversion to and from engine states
    def from_state(self, st) -> Dict[RawWord, Scalar]:
        va = st.va
        return {tuple((va.gen(x), -va.depth(x)) for x in w): sc for w, sc in st.words().items()}

    def to_words(self, state) -> Dict[RawWord, Scalar]:
        return {w: c for w, c in state.items() if c}
