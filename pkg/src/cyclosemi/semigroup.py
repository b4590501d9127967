"""Numerical semigroups: construction, Apery sets, symmetry, factorizations
and Betti elements.

Membership is kept as a Python int used as a bitset: bit ``n`` is set iff
``n`` is in the semigroup, for ``0 <= n <= F + 1``; everything above the
Frobenius number is a member.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, GapSetError

FactorizationVector = tuple[int, ...]


class NumericalSemigroup:
    """A numerical semigroup, immutable once built.

    Use :func:`from_generators` or :func:`from_gap_set` rather than calling
    the constructor. The natural numbers themselves are represented with the
    single minimal generator ``1`` and Frobenius number ``-1``.
    """

    __slots__ = ("_mask", "_frobenius", "_gens", "_gaps")

    def __init__(self, mask: int, frobenius: int, gens: tuple[int, ...] | None = None):
        self._mask = mask
        self._frobenius = frobenius
        self._gaps: tuple[int, ...] | None = None
        self._gens = gens if gens is not None else _minimal_generators(mask, frobenius)

    # -- basic invariants -------------------------------------------------

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        return self._gens

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def gaps(self) -> tuple[int, ...]:
        if self._gaps is None:
            m = self._mask
            self._gaps = tuple(n for n in range(1, self._frobenius + 1) if not (m >> n) & 1)
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def embedding_dimension(self) -> int:
        return len(self._gens)

    @property
    def multiplicity(self) -> int:
        return self._gens[0]

    @property
    def conductor(self) -> int:
        return self._frobenius + 1

    @property
    def is_natural(self) -> bool:
        return self._frobenius < 0

    @property
    def membership_mask(self) -> int:
        return self._mask

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self._frobenius:
            return True
        return bool((self._mask >> n) & 1)

    def elements(self, upto: int) -> Iterator[int]:
        """Members ``s`` with ``0 <= s <= upto``, ascending."""
        for n in range(upto + 1):
            if n in self:
                yield n

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._frobenius == other._frobenius and self._gens == other._gens

    def __hash__(self) -> int:
        return hash(self._gens)

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self._gens}" if len(self._gens) > 1 else f"NumericalSemigroup({self._gens[0]})"

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self._gens)) + ">"

    def to_json(self) -> dict:
        return {
            "min_gens": list(self._gens),
            "frobenius": self._frobenius,
            "gaps": list(self.gaps),
            "genus": self.genus,
        }


NATURALS_MASK = 0b11


def naturals() -> NumericalSemigroup:
    return NumericalSemigroup(NATURALS_MASK, -1, (1,))


def _minimal_generators(mask: int, frobenius: int) -> tuple[int, ...]:
    if frobenius < 0:
        return (1,)
    # multiplicity: least positive member
    m = 1
    while not (mask >> m) & 1:
        m += 1
    limit = frobenius + m
    full = (1 << (limit + 1)) - 1
    members = (mask | ~((1 << (frobenius + 1)) - 1)) & full
    nonzero = members & ~1
    sums = 0
    for a in range(m, limit - m + 1):
        if (nonzero >> a) & 1:
            sums |= nonzero << a
    gens_mask = nonzero & ~sums & full
    return tuple(n for n in range(m, limit + 1) if (gens_mask >> n) & 1)


def reachable_mask(gens: Sequence[int], limit: int) -> int:
    """Bitset of the sums of ``gens`` (with repetition) not exceeding ``limit``."""
    span = (1 << (limit + 1)) - 1
    reach = 1
    for g in gens:
        shift = g
        while shift <= limit:
            reach = (reach | (reach << shift)) & span
            shift <<= 1
    return reach


def monoid_contains(gens: Sequence[int], n: int) -> bool:
    if n < 0:
        return False
    return bool((reachable_mask(gens, n) >> n) & 1)


def _closure_mask(gens: Sequence[int]) -> tuple[int, int]:
    """Membership bitset and Frobenius number of the monoid generated by ``gens``."""
    small = min(gens)
    limit = max(2 * small * max(gens), 8)
    while True:
        reach = reachable_mask(gens, limit)
        holes = ~reach & ((1 << (limit + 1)) - 1)
        frob = holes.bit_length() - 1
        # a run of `small` consecutive members certifies everything above
        if limit - frob >= small:
            break
        limit *= 2
    if frob < 0:
        return NATURALS_MASK, -1
    mask = (reach & ((1 << (frob + 1)) - 1)) | (1 << (frob + 1))
    return mask, frob


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The numerical semigroup generated by ``gens`` (need not be minimal)."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise DomainError("at least one generator is required")
    if gens[0] <= 0:
        raise DomainError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise DomainError(f"generators {gens} have gcd {reduce(gcd, gens)}; complement would be infinite")
    if gens[0] == 1:
        return naturals()
    mask, frob = _closure_mask(gens)
    return NumericalSemigroup(mask, frob)


def semigroup_from_mask(mask: int, frobenius: int) -> NumericalSemigroup:
    """Wrap a membership bitset that is already known to be closed."""
    if frobenius < 0:
        return naturals()
    mask = (mask & ((1 << (frobenius + 1)) - 1)) | (1 << (frobenius + 1))
    return NumericalSemigroup(mask, frobenius)


def is_closed_mask(mask: int, frobenius: int) -> bool:
    """True iff the members up to ``frobenius`` never sum to a gap."""
    span = (1 << (frobenius + 1)) - 1
    members = mask & span
    holes = ~members & span
    for a in range(1, frobenius // 2 + 1):
        if (members >> a) & 1 and (members << a) & holes:
            return False
    return True


def from_gap_set(gaps: Iterable[int]) -> NumericalSemigroup:
    gap_list = sorted(set(int(g) for g in gaps))
    if gap_list and gap_list[0] <= 0:
        raise GapSetError(f"gaps must be positive integers, got {gap_list[0]}")
    if not gap_list:
        return naturals()
    frob = gap_list[-1]
    mask = (1 << (frob + 1)) - 1
    for g in gap_list:
        mask &= ~(1 << g)
    if not is_closed_mask(mask, frob):
        raise GapSetError(f"complement of {gap_list} is not closed under addition")
    return semigroup_from_mask(mask, frob)


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    """``Ap(S, m)``: members ``w`` with ``w - m`` outside ``S``."""
    if m <= 0 or m not in S:
        raise DomainError(f"{m} is not a positive element of {S}")
    return [w for w in range(S.frobenius + m + 1) if w in S and (w - m) not in S]


def is_symmetric(S: NumericalSemigroup) -> bool:
    F = S.frobenius
    if F < 0:
        return True
    return all((n in S) != ((F - n) in S) for n in range(F + 1))


def factorizations(S: NumericalSemigroup, s: int) -> list[FactorizationVector]:
    """All expressions of ``s`` over the minimal generators, lexicographically descending."""
    if s not in S:
        raise DomainError(f"{s} is not an element of {S}")
    gens = S.minimal_generators
    e = len(gens)
    out: list[FactorizationVector] = []
    vec = [0] * e

    def rec(i: int, rest: int) -> None:
        g = gens[i]
        if i == e - 1:
            if rest % g == 0:
                vec[i] = rest // g
                out.append(tuple(vec))
            return
        for k in range(rest // g, -1, -1):
            vec[i] = k
            rec(i + 1, rest - k * g)
        vec[i] = 0

    rec(0, s)
    return out


def betti_scan_bound(S: NumericalSemigroup) -> int:
    return S.frobenius + 2 * S.minimal_generators[-1]


def _support_sets(gens: Sequence[int], upto: int) -> list[set[int]]:
    # supports[s] = set of support bitmasks over all factorizations of s
    supports: list[set[int]] = [set() for _ in range(upto + 1)]
    supports[0].add(0)
    for s in range(1, upto + 1):
        acc = supports[s]
        for i, g in enumerate(gens):
            if g > s:
                break
            bit = 1 << i
            for sigma in supports[s - g]:
                acc.add(sigma | bit)
    return supports


def _components(sigmas: Iterable[int], e: int) -> int:
    parent = list(range(e))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    sigmas = list(sigmas)
    for sigma in sigmas:
        idx = [i for i in range(e) if (sigma >> i) & 1]
        r0 = find(idx[0])
        for i in idx[1:]:
            parent[find(i)] = r0
    roots = {find((sigma & -sigma).bit_length() - 1) for sigma in sigmas}
    return len(roots)


def betti_elements(S: NumericalSemigroup, bound: int | None = None) -> list[int]:
    """Betti elements with multiplicity (factorization-graph components minus one)."""
    if S.is_natural:
        return []
    gens = S.minimal_generators
    upto = betti_scan_bound(S) if bound is None else bound
    supports = _support_sets(gens, upto)
    out: list[int] = []
    for s in range(1, upto + 1):
        sig = supports[s]
        if len(sig) < 2:
            continue
        k = _components(sig, len(gens))
        out.extend([s] * (k - 1))
    return out


def minimal_presentation_size(S: NumericalSemigroup) -> int:
    return len(betti_elements(S))
