"""Semigroup polynomials, cyclotomic factorization, polynomial length and
cyclotomic exponent sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping

import numpy as np

from .arith import divisors, factorize, is_prime, mobius, totient_table
from .errors import DomainError
from .polynomials import IntPoly, cyclotomic, poly_divmod
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class CycloFactorization:
    """``f = prod(Phi_d ** mult) * remainder`` with no ``Phi_d`` (d >= 2) left in the remainder."""

    factors: tuple[tuple[int, int], ...]
    remainder: IntPoly

    @property
    def cyclotomic(self) -> bool:
        return self.remainder == IntPoly.one()

    @property
    def length(self) -> int | None:
        if not self.cyclotomic:
            return None
        return sum(m for _, m in self.factors)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.factors)

    def multiplicity(self, d: int) -> int:
        return dict(self.factors).get(d, 0)

    def expand(self) -> IntPoly:
        out = self.remainder
        for d, m in self.factors:
            out = out * cyclotomic(d) ** m
        return out

    def to_json(self) -> dict:
        return {
            "factors": [{"d": d, "mult": m} for d, m in self.factors],
            "remainder": self.remainder.to_json(),
            "cyclotomic": self.cyclotomic,
            "length": self.length,
        }


@dataclass(frozen=True)
class ExponentSequence:
    """Nonzero exponents ``e_j`` with ``P = prod (1 - x^j)^e_j``.

    When ``exact`` is false the identity only holds modulo
    ``x^(truncation_bound + 1)``.
    """

    entries: Mapping[int, int] = field(default_factory=dict)
    truncation_bound: int = 0
    exact: bool = False

    def __getitem__(self, j: int) -> int:
        return self.entries.get(j, 0)

    def support(self) -> list[int]:
        return sorted(self.entries)

    def negative_support(self) -> list[int]:
        return sorted(j for j, e in self.entries.items() if e < 0)

    def positive_support(self) -> list[int]:
        return sorted(j for j, e in self.entries.items() if e > 0)

    def expand(self, bound: int) -> IntPoly:
        """``prod (1 - x^j)^e_j`` truncated to degree ``bound``."""
        series = [1] + [0] * bound
        for j, e in sorted(self.entries.items()):
            if j > bound:
                continue
            _times_binomial_power(series, j, e)
        return IntPoly(series)

    def to_json(self) -> dict:
        return {
            "entries": [[j, e] for j, e in sorted(self.entries.items())],
            "truncation_bound": self.truncation_bound,
            "exact": self.exact,
        }


def _times_binomial_power(series: list[int], j: int, e: int) -> None:
    """In place: ``series *= (1 - x^j)^e`` modulo ``x^len(series)``."""
    n = len(series)
    if e > 0:
        for _ in range(e):
            for k in range(n - 1, j - 1, -1):
                series[k] -= series[k - j]
    else:
        for _ in range(-e):
            for k in range(j, n):
                series[k] += series[k - j]


def semigroup_polynomial(S: NumericalSemigroup) -> IntPoly:
    """``P_S = 1 + (x - 1) * sum of x^g over gaps``, degree ``F + 1``."""
    if S.is_natural:
        return IntPoly.one()
    F = S.frobenius
    mask = S.membership_mask
    coeffs = [1]
    prev = 1
    for k in range(1, F + 2):
        cur = (mask >> k) & 1
        coeffs.append(cur - prev)
        prev = cur
    return IntPoly(coeffs)


def semigroup_polynomial_from_mask(mask: int, frobenius: int) -> list[int]:
    bits = [(mask >> k) & 1 for k in range(frobenius + 2)]
    bits[frobenius + 1] = 1
    return [1] + [bits[k] - bits[k - 1] for k in range(1, frobenius + 2)]


def hilbert_numerator_truncated(S: NumericalSemigroup, bound: int) -> IntPoly:
    """``sum of x^s`` over members ``s <= bound``."""
    if bound < 0:
        raise DomainError(f"bound must be non-negative, got {bound}")
    return IntPoly(1 if k in S else 0 for k in range(bound + 1))


# -- trial division by cyclotomic polynomials -------------------------------


@lru_cache(maxsize=None)
def _root_of_unity_mod(d: int) -> tuple[int, int]:
    """A prime ``p = 1 (mod d)`` above 1000 and a primitive ``d``-th root of unity mod ``p``."""
    p = d * max(1, 1000 // d) + 1
    while not is_prime(p):
        p += d
    qs = [q for q, _ in factorize(p - 1)]
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return p, pow(g, (p - 1) // d, p)


def _vanishes_at_root(coeffs: tuple[int, ...], d: int) -> bool:
    # necessary condition for Phi_d | f: f(w) = 0 mod p for a primitive d-th root w
    p, w = _root_of_unity_mod(d)
    acc = 0
    for a in reversed(coeffs):
        acc = (acc * w + a) % p
    return acc == 0


def cyclotomic_factorization(f: IntPoly) -> CycloFactorization:
    """Strip every ``Phi_d`` (``d >= 2``) from ``f`` by repeated exact division.

    Any ``Phi_d`` dividing ``f`` has ``phi(d) <= deg f`` and hence
    ``d <= 2 (deg f)^2``, so the scan is complete. ``Phi_1`` is never
    extracted; if present it stays in the remainder.
    """
    if f.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    if f[0] not in (1, -1):
        raise DomainError(f"constant term must be +1 or -1, got {f[0]}")
    rem = f
    d_max = 2 * rem.degree**2
    phi = totient_table(max(d_max, 2))
    factors = []
    d = 2
    while d <= d_max:
        if phi[d] <= rem.degree and _vanishes_at_root(rem.coeffs, d):
            mult = 0
            cyc = cyclotomic(d)
            while rem.degree >= cyc.degree:
                q, r = poly_divmod(rem, cyc)
                if not r.is_zero:
                    break
                rem = q
                mult += 1
            if mult:
                factors.append((d, mult))
                d_max = 2 * rem.degree**2
        d += 1
    return CycloFactorization(tuple(factors), rem)


def cyclotomic_part_bounds(rows: np.ndarray) -> np.ndarray:
    """Upper bound on the total degree of cyclotomic factors of each row.

    ``rows`` holds the coefficients (lowest degree first) of polynomials that
    share one degree ``n``. For each ``d`` with ``phi(d) <= n`` the bound uses
    the order of vanishing, modulo a prime ``p = 1 (mod d)``, at a primitive
    ``d``-th root of unity. ``Phi_d^m | f`` over the integers forces
    ``(x - w)^m | f`` mod ``p``, so a row whose bound is below ``n`` is
    certainly not a product of cyclotomic polynomials.
    """
    rows = np.asarray(rows, dtype=np.int64)
    count, width = rows.shape
    n = width - 1
    phi = totient_table(max(2 * n * n, 2))
    ds = [d for d in range(1, len(phi)) if phi[d] <= n]
    bound = np.zeros(count, dtype=np.int64)
    if n <= 0:
        return bound
    for d in ds:
        p, w = _root_of_unity_mod(d)
        powers = [pow(w, k, p) for k in range(width)]
        alive = np.ones(count, dtype=bool)
        mult = np.zeros(count, dtype=np.int64)
        for j in range(n // phi[d]):
            idx = np.nonzero(alive)[0]
            if idx.size == 0:
                break
            # j-th Hasse derivative evaluated at w
            weights = np.array(
                [comb(k, j) % p * powers[k - j] % p if k >= j else 0 for k in range(width)],
                dtype=np.int64,
            )
            vals = (rows[idx] % p) @ weights % p
            hit = vals == 0
            mult[idx[hit]] += 1
            alive[idx[~hit]] = False
        bound += mult * phi[d]
    return bound


def is_cyclotomic(S: NumericalSemigroup) -> bool:
    if S.is_natural:
        return True
    return cyclotomic_factorization(semigroup_polynomial(S)).cyclotomic


def polynomial_length(S: NumericalSemigroup) -> int:
    """Number of irreducible factors of ``P_S``; only for cyclotomic ``S``."""
    if S.is_natural:
        return 0
    fac = cyclotomic_factorization(semigroup_polynomial(S))
    if not fac.cyclotomic:
        raise DomainError(f"length defined here only for cyclotomic inputs; {S} is not cyclotomic")
    return fac.length


def default_exponent_bound(S: NumericalSemigroup) -> int:
    return 2 * (S.frobenius + 2)


def exponent_sequence_of(f: IntPoly, bound: int) -> ExponentSequence:
    """Peel ``f = prod (1 - x^j)^e_j`` for ``j <= bound``; needs ``f(0) = 1``."""
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    if f[0] != 1:
        raise DomainError("exponent sequences need constant term 1")
    residual = [f[k] for k in range(bound + 1)]
    entries = {}
    for j in range(1, bound + 1):
        e = -residual[j]
        if e:
            entries[j] = e
            # divide the residual by (1 - x^j)^e
            _times_binomial_power(residual, j, -e)
    return ExponentSequence(entries, bound, False)


def exponent_sequence_truncated(S: NumericalSemigroup, bound: int | None = None) -> ExponentSequence:
    if bound is None:
        bound = default_exponent_bound(S)
    return exponent_sequence_of(semigroup_polynomial(S), bound)


def exponent_sequence_from_factors(factors: tuple[tuple[int, int], ...]) -> ExponentSequence:
    """Finite exponent sequence of ``prod Phi_d^f_d``, using ``Phi_d = prod (1 - x^j)^mu(d/j)``."""
    entries: dict[int, int] = {}
    for d, f in factors:
        if d < 2:
            raise DomainError("Phi_1 carries a sign and has no exponent sequence here")
        for j in divisors(d):
            mu = mobius(d // j)
            if mu:
                entries[j] = entries.get(j, 0) + f * mu
    entries = {j: e for j, e in sorted(entries.items()) if e}
    top = max(entries, default=0)
    return ExponentSequence(entries, top, True)


def exponent_sequence_exact(S: NumericalSemigroup) -> ExponentSequence:
    if S.is_natural:
        return ExponentSequence({}, 0, True)
    fac = cyclotomic_factorization(semigroup_polynomial(S))
    if not fac.cyclotomic:
        raise DomainError(f"{S} is not cyclotomic; its exponent sequence has infinite support")
    return exponent_sequence_from_factors(fac.factors)
