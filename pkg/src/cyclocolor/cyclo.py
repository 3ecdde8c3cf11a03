"""Exact arithmetic in the cyclotomic integers Z[xi_n].

Elements are stored as integer coefficient vectors on the power basis
``1, xi, ..., xi^(phi(n)-1)``, always reduced modulo the cyclotomic
polynomial.  Only the class-number-one moduli are accepted.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .intlat import determinant

__all__ = [
    "CLASS_NUMBER_ONE",
    "ModulusError",
    "ModulusContext",
    "CycInt",
    "context",
    "euler_phi",
    "cyclotomic_polynomial",
    "reduce",
    "add",
    "sub",
    "mul",
    "conjugate",
    "mult_matrix",
    "norm",
    "parse_polynomial",
    "parse_generator",
    "format_polynomial",
]

# n with Z[xi_n] a principal ideal domain, n = 2 mod 4 omitted (M_2n = M_n for odd n).
CLASS_NUMBER_ONE = (
    3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 24,
    25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84,
)


class ModulusError(ValueError):
    """Raised for a modulus outside the class-number-one list, or mixed moduli."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# ---------------------------------------------------------------- polynomials
# Ascending coefficient lists; helpers stay private to keep the API small.

def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += sign * v
    return _trim(out)


def _poly_divmod_monic(a: Sequence[int], m: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic polynomial; both quotient and remainder stay integral."""
    r = list(a)
    dm = len(m) - 1
    if len(r) - 1 < dm:
        return [0], _trim(r or [0])
    q = [0] * (len(r) - dm)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            q[i - dm] = c
            for j in range(dm + 1):
                r[i - dm + j] -= c * m[j]
    return _trim(q), _trim(r[:dm] or [0])


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod_monic(num, _cyclotomic(d))
            assert r == [0], f"Phi_{d} does not divide x^{n}-1 remainder"
            num = q
    return tuple(num)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n in ascending order, e.g. ``[-1, 1]`` for n = 1."""
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    return list(_cyclotomic(n))


# ---------------------------------------------------------------- contexts

@dataclass(frozen=True)
class ModulusContext:
    """Everything derived from the modulus n.

    ``N`` is the rotation order of the module: n for even n, 2n for odd n.
    """

    n: int

    def __post_init__(self):
        n = self.n
        if n in CLASS_NUMBER_ONE:
            return
        if n % 4 == 2 and n // 2 in CLASS_NUMBER_ONE:
            raise ModulusError(
                f"n={n} is 2 mod 4 and M_{n} = M_{n // 2}; use n={n // 2} instead"
            )
        raise ModulusError(
            f"n={n} is not a class-number-one modulus; choose one of "
            + ", ".join(map(str, CLASS_NUMBER_ONE))
        )

    @cached_property
    def degree(self) -> int:
        return euler_phi(self.n)

    @property
    def phi(self) -> int:
        return self.degree

    @cached_property
    def N(self) -> int:
        return self.n if self.n % 2 == 0 else 2 * self.n

    @cached_property
    def cyclotomic_poly(self) -> tuple[int, ...]:
        return _cyclotomic(self.n)

    def element(self, coeffs: Iterable[int]) -> "CycInt":
        return reduce(list(coeffs), self)

    @property
    def one(self) -> "CycInt":
        return self.element([1])

    @property
    def xi(self) -> "CycInt":
        return self.element([0, 1])

    def __repr__(self) -> str:
        return f"ModulusContext(n={self.n})"


@lru_cache(maxsize=None)
def context(n: int) -> ModulusContext:
    """Cached ModulusContext for ``n``."""
    return ModulusContext(n)


# ---------------------------------------------------------------- elements

@dataclass(frozen=True)
class CycInt:
    """An element of Z[xi_n]; ``coeffs[j]`` is the coefficient of xi^j."""

    ctx: ModulusContext
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.degree:
            raise ValueError(
                f"expected {self.ctx.degree} coefficients, got {len(self.coeffs)}; use reduce()"
            )

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.ctx.n != self.ctx.n:
                raise ModulusError(f"modulus mismatch: {self.ctx.n} vs {other.ctx.n}")
            return other
        if isinstance(other, (int, np.integer)):
            return reduce([int(other)], self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return reduce(_poly_mul(self.coeffs, other.coeffs), self.ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not elements of Z[xi]")
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def conjugate(self) -> "CycInt":
        return conjugate(self)

    def mult_matrix(self) -> np.ndarray:
        return mult_matrix(self)

    def norm(self) -> int:
        return norm(self)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=object)

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)

    def __repr__(self) -> str:
        return f"CycInt(n={self.ctx.n}, {format_polynomial(self.coeffs)!r})"


def reduce(raw: Sequence[int], ctx: ModulusContext) -> CycInt:
    """Remainder of the polynomial ``raw`` modulo Phi_n as a CycInt."""
    raw = [int(c) for c in raw] or [0]
    _, r = _poly_divmod_monic(raw, ctx.cyclotomic_poly)
    r = r + [0] * (ctx.degree - len(r))
    return CycInt(ctx, tuple(r))


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def sub(a: CycInt, b: CycInt) -> CycInt:
    return a - b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def conjugate(a: CycInt) -> CycInt:
    """Complex conjugation xi^j -> xi^(n-j)."""
    n = a.ctx.n
    raw = [0] * n
    for j, c in enumerate(a.coeffs):
        raw[(n - j) % n] += c
    return reduce(raw, a.ctx)


def mult_matrix(a: CycInt) -> np.ndarray:
    """Matrix of x -> a*x on the power basis; column j holds a*xi^j."""
    ctx = a.ctx
    cols = []
    col = a
    for _ in range(ctx.degree):
        cols.append(col.coeffs)
        col = reduce((0,) + col.coeffs, ctx)
    return np.array(cols, dtype=object).T.copy()


def norm(a: CycInt) -> int:
    """Field norm of ``a``, the determinant of its multiplication matrix."""
    return determinant(mult_matrix(a))


# ---------------------------------------------------------------- text I/O

_TOKEN = re.compile(r"\s*(?:(\d+)|([xX]|ξ)|(\^)|([+\-*(),]))")


class _Parser:
    # expr := term (('+'|'-') term)*
    # term := unary (('*')? '(' ... | '*' unary)*      -- juxtaposed groups multiply
    # unary := ('-'|'+')* power
    # power := atom ('^' int)?
    # atom := int ['x' ['^' int]] | 'x' | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse generator {self.text!r} at position {pos}")
            pos = m.end()
            if m.group(1):
                self.toks.append(("int", m.group(1)))
            elif m.group(2):
                self.toks.append(("x", "x"))
            elif m.group(3):
                self.toks.append(("op", "^"))
            elif m.group(4):
                self.toks.append(("op", m.group(4)))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"cannot parse generator {self.text!r}: expected {value or 'token'}")
        self.i += 1
        return tok

    def parse(self) -> list[int]:
        if not self.toks:
            raise ValueError("empty generator")
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"cannot parse generator {self.text!r}: trailing input")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            p = _poly_add(p, self.term(), sign)
        return p

    def term(self):
        p = self.unary()
        while True:
            kind, val = self.peek()
            if val == "*":
                self.take()
                p = _poly_mul(p, self.unary())
            elif val == "(":
                p = _poly_mul(p, self.power())
            else:
                return p

    def unary(self):
        sign = 1
        while self.peek()[1] in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        p = self.power()
        return [sign * c for c in p]

    def power(self):
        p = self.atom()
        if self.peek()[1] == "^":
            self.take()
            e = int(self.take()[1]) if self.peek()[0] == "int" else None
            if e is None:
                raise ValueError(f"cannot parse generator {self.text!r}: exponent must be an integer")
            q = [1]
            for _ in range(e):
                q = _poly_mul(q, p)
            p = q
        return p

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            c = int(val)
            if self.peek()[0] == "x":  # coefficient form such as 2x^3
                return [c * v for v in self.power()]
            return [c]
        if kind == "x":
            self.take()
            return [0, 1]
        if val == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ValueError(f"cannot parse generator {self.text!r}: unexpected {val!r}")


def parse_polynomial(text: str) -> list[int]:
    """Parse a generator string into unreduced ascending coefficients.

    Accepts polynomial syntax in ``x`` (``"1-x+x^3"``, ``"(1-x)^3"``,
    ``"(1-x)(1-x+x^3)"``, ``"2-2x+x^5"``) or a comma-separated ascending
    coefficient list (``"1,-1,0,1"``).
    """
    text = text.strip()
    if "," in text and not any(ch in text for ch in "xXξ()"):
        try:
            return [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse coefficient list {text!r}") from exc
    return _Parser(text).parse()


def parse_generator(text: str, ctx: ModulusContext) -> CycInt:
    return reduce(parse_polynomial(text), ctx)


def format_polynomial(coeffs: Sequence[int], var: str = "x") -> str:
    """``[1, -1, 0, 1]`` -> ``"1-x+x^3"``."""
    parts = []
    for j, c in enumerate(coeffs):
        c = int(c)
        if c == 0:
            continue
        mono = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
        mag = abs(c)
        body = str(mag) if (mono == "" or mag != 1) else ""
        body += mono
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out
