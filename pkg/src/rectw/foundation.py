"""Instance parameters, parity/grading conventions and the exact scalar ring.

Every coefficient handled by the package lives in Q[alpha, c]. A monomial
``alpha**a * c**b`` is the tuple ``(a, b)``; coefficients are ``int`` or
``fractions.Fraction`` so that integer-only computations stay fast.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Mono = Tuple[int, int]
Coeff = Union[int, Fraction]

ONE: Mono = (0, 0)
ALPHA: Mono = (1, 0)
C: Mono = (0, 1)


def normalize_coeff(x) -> Coeff:
    """Collapse integral Fractions to int; reject floats."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return normalize_coeff(Fraction(x.numerator, x.denominator))
    raise TypeError(f"inexact coefficient {x!r}")


class Scalar:
    """Sparse polynomial in alpha and c with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, Coeff] | None = None):
        clean: Dict[Mono, Coeff] = {}
        if terms:
            for mono, v in terms.items():
                v = normalize_coeff(v)
                if v:
                    a, b = mono
                    if a < 0 or b < 0:
                        raise ValueError(f"negative exponent in {mono}")
                    clean[(int(a), int(b))] = v
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, x) -> "Scalar":
        return cls({ONE: x})

    @classmethod
    def alpha(cls) -> "Scalar":
        return cls({ALPHA: 1})

    @classmethod
    def c(cls) -> "Scalar":
        return cls({C: 1})

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls.const(x)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        out = dict(self.terms)
        for mono, v in other.terms.items():
            out[mono] = out.get(mono, 0) + v
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        out: Dict[Mono, Coeff] = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + v1 * v2
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Scalar ring has no inverses")
        out = Scalar.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, x):
        # only division by nonzero rational constants
        x = Fraction(normalize_coeff(x))
        if x == 0:
            raise ZeroDivisionError
        return Scalar({k: Fraction(v) / x for k, v in self.terms.items()})

    def specialize_c0(self) -> "Scalar":
        return Scalar({k: v for k, v in self.terms.items() if k[1] == 0})

    def evaluate(self, alpha=0, c=0) -> Fraction:
        total = Fraction(0)
        for (a, b), v in self.terms.items():
            total += Fraction(v) * Fraction(alpha) ** a * Fraction(c) ** b
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Scalar({format_poly(self.terms)})"

    def __str__(self):
        return format_poly(self.terms)

    # -- serialization ------------------------------------------------
    def to_json(self) -> Dict[str, str]:
        return {mono_key(m): str(v) for m, v in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "Scalar":
        return cls({parse_mono_key(k): Fraction(v) for k, v in data.items()})


def mono_key(mono: Mono) -> str:
    return f"a{mono[0]}c{mono[1]}"


def parse_mono_key(key: str) -> Mono:
    a, c = key[1:].split("c")
    return int(a), int(c)


def format_poly(terms: Mapping[Mono, Coeff]) -> str:
    if not terms:
        return "0"
    parts = []
    for (a, b), v in sorted(terms.items(), reverse=True):
        var = "*".join(
            s for s in (
                ("alpha" if a == 1 else f"alpha^{a}") if a else "",
                ("c" if b == 1 else f"c^{b}") if b else "",
            ) if s
        )
        if not var:
            parts.append(str(v))
        elif v == 1:
            parts.append(var)
        elif v == -1:
            parts.append("-" + var)
        else:
            parts.append(f"{v}*{var}")
    return " + ".join(parts).replace("+ -", "- ")


def poly_add_into(acc: Dict[Mono, Coeff], terms: Mapping[Mono, Coeff], factor: Coeff = 1) -> None:
    for mono, v in terms.items():
        nv = acc.get(mono, 0) + factor * v
        if nv:
            acc[mono] = nv
        else:
            acc.pop(mono, None)


@dataclass(frozen=True)
class Instance:
    """A block shape (m|n) repeated l times: the algebra gl(ml|nl)."""

    m: int
    n: int
    l: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if self.l < 1:
            raise ValueError("l must be positive")
        if self.m + self.n < 1:
            raise ValueError("m + n must be at least 1")

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def size(self) -> int:
        return self.N * self.l

    @property
    def super(self) -> bool:
        return self.n > 0

    def p(self, i: int) -> int:
        """Parity of the block index i (1..N); index 0 is read as N."""
        if i == 0:
            i = self.N
        if not 1 <= i <= self.N:
            raise ValueError(f"block index {i} out of range 1..{self.N}")
        return 0 if i <= self.m else 1

    def sign(self, i: int) -> int:
        return -1 if self.p(i) else 1

    def pe(self, i: int, j: int) -> int:
        """Parity of the matrix unit e_{i,j} of gl(m|n)."""
        return (self.p(i) + self.p(j)) % 2

    # flat index A = s*N + i (s = 0..l-1, i = 1..N)
    def split(self, A: int) -> Tuple[int, int]:
        if not 1 <= A <= self.size:
            raise ValueError(f"index {A} outside 1..{self.size}")
        s, i = divmod(A - 1, self.N)
        return s, i + 1

    def flat(self, s: int, i: int) -> int:
        if not (0 <= s < self.l and 1 <= i <= self.N):
            raise ValueError(f"block coordinates ({s},{i}) out of range")
        return s * self.N + i

    def unit_parity(self, A: int, B: int) -> int:
        return self.pe(self.split(A)[1], self.split(B)[1])

    def grade(self, A: int, B: int) -> int:
        """Grade t of e_{A,B}: it lies in g_t with t = colblock - rowblock."""
        s1, _ = self.split(A)
        s2, _ = self.split(B)
        return s2 - s1

    def check_yangian(self) -> None:
        """Hypotheses for the Yangian-side maps."""
        m, n = self.m, self.n
        if n == 0:
            if m < 3:
                raise ValueError("non-super case requires m >= 3")
        elif not (m >= 2 and n >= 2 and m != n):
            raise ValueError("super case requires m, n >= 2 and m != n")
        if self.l < 2:
            raise ValueError("l >= 2 is required")

    def __str__(self):
        return f"({self.m},{self.n},{self.l})"


def delta(a, b) -> int:
    return 1 if a == b else 0


def iter_pairs(N: int) -> Iterable[Tuple[int, int]]:
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            yield i, j
