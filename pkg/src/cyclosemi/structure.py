"""Gluings, complete intersections, the S^(e)_k family and the classification
of cyclotomic semigroups of polynomial length at most two."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Iterator, Sequence, Union

from .arith import is_prime, primes_up_to
from .cyclotomy import CycloFactorization, cyclotomic_factorization, semigroup_polynomial
from .errors import DomainError
from .polynomials import IntPoly, cyclotomic, poly_compose_power
from .semigroup import NumericalSemigroup, from_generators, monoid_contains


@dataclass(frozen=True)
class Gluing:
    """``S = a1 * S1 + a2 * S2`` glued at ``a1 * a2``.

    ``part_a`` holds the minimal generators of ``S`` divisible by ``a1``
    (it always contains the multiplicity of ``S``), ``part_b`` the rest.
    """

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    a1: int
    a2: int
    s1: NumericalSemigroup
    s2: NumericalSemigroup

    @property
    def glue_point(self) -> int:
        return self.a1 * self.a2


@dataclass(frozen=True)
class Leaf:
    leaf: bool = True

    @property
    def generators(self) -> tuple[int, ...]:
        return (1,)

    def betti(self) -> list[int]:
        return []

    def depth(self) -> int:
        return 0

    def to_json(self) -> dict:
        return {"leaf": True}


@dataclass(frozen=True)
class Node:
    a1: int
    a2: int
    left: "GluingTree"
    right: "GluingTree"

    @property
    def glue_point(self) -> int:
        return self.a1 * self.a2

    @property
    def generators(self) -> tuple[int, ...]:
        gens = {self.a1 * g for g in self.left.generators}
        gens |= {self.a2 * g for g in self.right.generators}
        return tuple(sorted(gens))

    def betti(self) -> list[int]:
        out = [self.a1 * b for b in self.left.betti()]
        out += [self.a2 * b for b in self.right.betti()]
        out.append(self.glue_point)
        return sorted(out)

    def depth(self) -> int:
        return 1 + max(self.left.depth(), self.right.depth())

    def to_json(self) -> dict:
        return {
            "a1": self.a1,
            "a2": self.a2,
            "glue_point": self.glue_point,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


GluingTree = Union[Leaf, Node]


def tree_to_json(tree: GluingTree) -> dict:
    out = tree.to_json()
    out["betti"] = tree.betti()
    return out


def _is_proper_element(n: int, S: NumericalSemigroup) -> bool:
    # in S, but neither zero nor a minimal generator
    return n in S and n != 0 and n not in S.minimal_generators


def gluing_polynomial_identity(S: NumericalSemigroup, g: Gluing) -> bool:
    """``P_S = P_<a1,a2> * P_S1(x^a1) * P_S2(x^a2)``."""
    lhs = semigroup_polynomial(S)
    base = semigroup_polynomial(from_generators([g.a1, g.a2]))
    rhs = base * poly_compose_power(semigroup_polynomial(g.s1), g.a1)
    rhs = rhs * poly_compose_power(semigroup_polynomial(g.s2), g.a2)
    return lhs == rhs


def _try_split(S: NumericalSemigroup, part_a: tuple[int, ...], part_b: tuple[int, ...], verify: bool) -> Gluing | None:
    a1 = reduce(gcd, part_a)
    a2 = reduce(gcd, part_b)
    if gcd(a1, a2) != 1:
        return None
    gens1 = [g // a1 for g in part_a]
    gens2 = [g // a2 for g in part_b]
    # cheap membership tests before building either factor
    if a2 in gens1 or not monoid_contains(gens1, a2):
        return None
    if a1 in gens2 or not monoid_contains(gens2, a1):
        return None
    s1 = from_generators(gens1)
    if not _is_proper_element(a2, s1):
        return None
    s2 = from_generators(gens2)
    if not _is_proper_element(a1, s2):
        return None
    glue = Gluing(part_a, part_b, a1, a2, s1, s2)
    if verify and not gluing_polynomial_identity(S, glue):
        return None
    return glue


def _bitmask_split(gens: Sequence[int], mask: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = tuple(g for i, g in enumerate(gens) if (mask >> i) & 1)
    b = tuple(g for i, g in enumerate(gens) if not (mask >> i) & 1)
    return a, b


def _candidate_masks(gens: Sequence[int]) -> list[int]:
    # In a gluing no generator outside part_a is divisible by a1, so part_a
    # is {g : d | g} for some d >= 2; orient every split so bit 0 is in part_a.
    e = len(gens)
    full = (1 << e) - 1
    seen = set()
    for d in sorted({d for g in gens for d in range(2, g + 1) if g % d == 0}):
        mask = sum(1 << i for i, g in enumerate(gens) if g % d == 0)
        if mask in (0, full):
            continue
        seen.add(mask if mask & 1 else full ^ mask)
    return sorted(seen)


def detect_gluings(S: NumericalSemigroup, verify: bool = True) -> list[Gluing]:
    """Every decomposition of ``S`` as a gluing, ordered by the bitmask of ``part_a``."""
    gens = S.minimal_generators
    if len(gens) < 2:
        return []
    out = []
    for mask in _candidate_masks(gens):
        part_a, part_b = _bitmask_split(gens, mask)
        glue = _try_split(S, part_a, part_b, verify)
        if glue is not None:
            out.append(glue)
    return out


def detect_gluings_exhaustive(S: NumericalSemigroup, verify: bool = True) -> list[Gluing]:
    """Same result as :func:`detect_gluings`, trying all ``2^(e-1) - 1`` bipartitions."""
    gens = S.minimal_generators
    e = len(gens)
    if e < 2:
        return []
    out = []
    for mask in range(1, 1 << e, 2):
        if mask == (1 << e) - 1:
            continue
        part_a, part_b = _bitmask_split(gens, mask)
        glue = _try_split(S, part_a, part_b, verify)
        if glue is not None:
            out.append(glue)
    return out


@lru_cache(maxsize=65536)
def _ci_tree(gens: tuple[int, ...], verify: bool) -> GluingTree | None:
    if gens == (1,):
        return Leaf()
    S = from_generators(gens)
    for glue in detect_gluings(S, verify):
        left = _ci_tree(glue.s1.minimal_generators, verify)
        if left is None:
            continue
        right = _ci_tree(glue.s2.minimal_generators, verify)
        if right is None:
            continue
        return Node(glue.a1, glue.a2, left, right)
    return None


def is_complete_intersection(S: NumericalSemigroup, verify: bool = True) -> GluingTree | None:
    """A gluing tree witnessing that ``S`` is a complete intersection, or None."""
    return _ci_tree(S.minimal_generators, verify)


def ci_hilbert_form(tree: GluingTree) -> IntPoly:
    """``(1 - x) * prod(1 - x^b) / prod(1 - x^n)`` over Betti elements and generators."""
    num = IntPoly((1, -1))
    for b in tree.betti():
        num = num * IntPoly.monomial(b, -1) + num
    for n in tree.generators:
        if n == 1:
            continue
        num, r = divmod(num, IntPoly.monomial(n, -1) + 1)
        if not r.is_zero:
            raise ArithmeticError(f"1 - x^{n} does not divide the numerator")
    if tree.generators == (1,):
        return IntPoly.one()
    return num


# -- the S^(e)_k family --------------------------------------------------------


@dataclass(frozen=True)
class FamilyCertificate:
    e: int
    k: int
    primes: tuple[int, ...]
    tree: GluingTree
    factorization: CycloFactorization

    @property
    def length(self) -> int:
        return self.factorization.length


def _admissible(p: int, S: NumericalSemigroup, used: Sequence[int]) -> bool:
    return is_prime(p) and p not in used and _is_proper_element(p, S)


def build_family_Sek(e: int, k: int, primes: Sequence[int] | None = None) -> tuple[NumericalSemigroup, FamilyCertificate]:
    """Build ``S^(2)_k = <p1^k, p2>`` and glue on ``p_(i+1) N`` with factor ``p1``.

    Missing primes are chosen as the smallest admissible ones. The result
    has embedding dimension ``e`` and polynomial length ``e + k - 2``.
    """
    if e < 2 or k < 1:
        raise DomainError(f"need e >= 2 and k >= 1, got e={e}, k={k}")
    given = list(primes) if primes is not None else []
    if len(given) > e:
        raise DomainError(f"{len(given)} primes supplied for e={e}")
    if any(not is_prime(p) for p in given) or len(set(given)) != len(given):
        raise DomainError(f"primes must be distinct primes, got {given}")
    chosen = given[:2]
    if len(chosen) < 2:
        pool = [p for p in primes_up_to(100) if p not in chosen]
        chosen += pool[: 2 - len(chosen)]
    p1 = chosen[0]
    S = from_generators([p1**k, chosen[1]])
    tree: GluingTree = Node(p1**k, chosen[1], Leaf(), Leaf())
    for i in range(2, e):
        if i < len(given):
            p = given[i]
            if not _is_proper_element(p, S):
                raise DomainError(f"prime {p} is not a non-generator element of {S}")
        else:
            p = 2
            while not _admissible(p, S, chosen):
                p += 1
        chosen.append(p)
        S = from_generators([p1 * g for g in S.minimal_generators] + [p])
        tree = Node(p1, p, tree, Leaf())
    fac = cyclotomic_factorization(semigroup_polynomial(S))
    cert = FamilyCertificate(e, k, tuple(chosen), tree, fac)
    if S.embedding_dimension != e or cert.length != e + k - 2:
        raise ArithmeticError(
            f"family member {S} has e={S.embedding_dimension}, length={cert.length}; expected {e}, {e + k - 2}"
        )
    return S, cert


# -- length <= 2 classification -------------------------------------------------


@dataclass(frozen=True)
class Classification:
    tag: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(map(str, self.params))})"


def _prime_square_root(n: int) -> int | None:
    for q in range(2, n):
        if q * q == n:
            return q if is_prime(q) else None
        if q * q > n:
            return None
    return None


def _cyc_product(*indices: int) -> IntPoly:
    out = IntPoly.one()
    for d in indices:
        out = out * cyclotomic(d)
    return out


def _shapes(gens: tuple[int, ...]) -> Iterator[Classification]:
    if len(gens) == 2:
        a, b = gens
        if is_prime(a) and is_prime(b):
            yield Classification("PQ", (a, b))
        for p, sq in ((a, b), (b, a)):
            q = _prime_square_root(sq)
            if q is not None and is_prime(p) and p != q:
                yield Classification("PQ2", (p, q))
    elif len(gens) == 3:
        for i in range(3):
            p = gens[i]
            rest = [g for j, g in enumerate(gens) if j != i]
            for sq, qr in (rest, rest[::-1]):
                q = _prime_square_root(sq)
                if q is None or qr % q:
                    continue
                r = qr // q
                if is_prime(p) and is_prime(r) and len({p, q, r}) == 3:
                    yield Classification("PQ2QR", (p, q, r))


def classify_low_length(S: NumericalSemigroup) -> Classification:
    """Match a cyclotomic ``S`` of length 1 or 2 against the three admissible shapes."""
    P = semigroup_polynomial(S)
    fac = cyclotomic_factorization(P)
    if not fac.cyclotomic:
        raise DomainError(f"{S} is not cyclotomic")
    if fac.length not in (1, 2):
        raise DomainError(f"{S} has polynomial length {fac.length}; classification needs 1 or 2")
    for shape in _shapes(S.minimal_generators):
        if shape.tag == "PQ" and fac.length == 1:
            p, q = shape.params
            if P == cyclotomic(p * q):
                return shape
        elif shape.tag == "PQ2" and fac.length == 2:
            p, q = shape.params
            if P == _cyc_product(p * q, p * q * q):
                return shape
        elif shape.tag == "PQ2QR" and fac.length == 2:
            p, q, r = shape.params
            if p in from_generators([q, r]) and P == _cyc_product(p * q, q * q * r):
                return shape
    return Classification("VIOLATION")
