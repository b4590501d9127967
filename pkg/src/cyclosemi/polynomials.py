"""Dense integer polynomials and cyclotomic polynomials.

A polynomial ``a_0 + a_1 x + ... + a_n x^n`` is stored as the tuple
``(a_0, ..., a_n)`` with ``a_n != 0``; the zero polynomial is ``()``.
Coefficients are Python ints but are held to the signed 64-bit range so
that any runaway growth surfaces as :class:`CoefficientOverflowError`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .arith import divisors, mobius
from .errors import CoefficientOverflowError, DomainError

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _canonical(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    for a in c:
        if a > INT64_MAX or a < INT64_MIN:
            raise CoefficientOverflowError(f"coefficient {a} exceeds 64-bit range")
    return tuple(c)


class IntPoly:
    """Immutable polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _canonical(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _canonical((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other: int) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise DomainError("negative polynomial power")
        out = IntPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: IntPoly) -> IntPoly:
        return poly_divmod(self, other)[1]

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPoly:
        return cls(int(a) for a in data)


def _coerce(value: IntPoly | int) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly((value,))
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


def poly_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if f.is_zero or g.is_zero:
        return IntPoly()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] += a * b
    return IntPoly(out)


def poly_divmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Euclidean division by a divisor whose leading coefficient is +1 or -1."""
    if g.is_zero:
        raise DomainError("division by the zero polynomial")
    lead = g.leading
    if lead not in (1, -1):
        raise DomainError(f"divisor leading coefficient {lead} is not a unit")
    m = g.degree
    rem = list(f.coeffs)
    if len(rem) <= m:
        return IntPoly(), IntPoly(rem)
    quot = [0] * (len(rem) - m)
    gc = g.coeffs
    for k in range(len(rem) - 1, m - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        q = c * lead
        quot[k - m] = q
        base = k - m
        for j in range(m + 1):
            b = gc[j]
            if b:
                rem[base + j] -= q * b
    return IntPoly(quot), IntPoly(rem[:m])


def poly_compose_power(f: IntPoly, r: int) -> IntPoly:
    """Return ``f(x**r)``."""
    if r < 1:
        raise DomainError(f"substitution exponent must be >= 1, got {r}")
    if r == 1 or f.degree <= 0:
        return f
    out = [0] * (f.degree * r + 1)
    for k, a in enumerate(f.coeffs):
        out[k * r] = a
    return IntPoly(out)


def _mul_binomial(c: list[int], d: int) -> list[int]:
    # c * (x^d - 1)
    out = [0] * (len(c) + d)
    for k, a in enumerate(c):
        out[k + d] += a
        out[k] -= a
    return out


def _div_binomial(c: list[int], d: int) -> list[int]:
    # exact c / (x^d - 1); q_k = q_{k-d} - c_k, read off from low degree up
    n = len(c) - d
    q = [0] * n
    for k in range(n):
        q[k] = (q[k - d] if k >= d else 0) - c[k]
    for k in range(n, len(c)):
        if c[k] != (q[k - d] if k >= d else 0):
            raise ArithmeticError(f"x^{d} - 1 does not divide the polynomial")
    return q


@lru_cache(maxsize=4096)
def cyclotomic(n: int) -> IntPoly:
    """The ``n``-th cyclotomic polynomial via Moebius inversion of ``x^n - 1``."""
    if n < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {n}")
    num, den = [], []
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num.append(d)
        elif mu == -1:
            den.append(d)
    c = [1]
    for d in num:
        c = _mul_binomial(c, d)
    for d in den:
        c = _div_binomial(c, d)
    return IntPoly(c)


def is_palindromic(f: IntPoly) -> bool:
    if f.is_zero:
        raise DomainError("palindromy is undefined for the zero polynomial")
    return f.coeffs == f.coeffs[::-1]


def product(polys: Iterable[IntPoly]) -> IntPoly:
    out = IntPoly.one()
    for p in polys:
        out = out * p
    return out
