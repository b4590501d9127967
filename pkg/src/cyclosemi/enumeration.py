"""Enumeration of (symmetric) numerical semigroups by Frobenius number, the
cyclotomic census and the conjecture checks run over it.

Cyclotomic semigroups are symmetric (their polynomial is a product of
palindromic factors), so the census only walks symmetric semigroups. Work is
split by Frobenius number; each value is an independent task whose result is
a plain dict, so it can be checkpointed as one JSON line.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from .arith import divisor_count
from .cyclotomy import (
    cyclotomic_factorization,
    cyclotomic_part_bounds,
    exponent_sequence_from_factors,
    semigroup_polynomial_from_mask,
)
from .errors import DomainError
from .polynomials import IntPoly
from .semigroup import NumericalSemigroup, from_gap_set, is_closed_mask, semigroup_from_mask
from .structure import classify_low_length, is_complete_intersection

log = logging.getLogger(__name__)

BRUTE_FORCE_CAP = 22

CONJECTURES = ("C1", "C-length", "C-msg", "C-maximalsD")


# -- enumeration --------------------------------------------------------------


def enumerate_all_with_frobenius(F: int) -> list[NumericalSemigroup]:
    """Every numerical semigroup with Frobenius number ``F``, by subset search.

    Exponential in ``F``; meant as an oracle for small cases.
    """
    if not 1 <= F <= BRUTE_FORCE_CAP:
        raise DomainError(f"brute-force enumeration needs 1 <= F <= {BRUTE_FORCE_CAP}, got {F}")
    span = (1 << (F + 1)) - 1
    out = []
    for subset in range(1 << (F - 1)):
        gaps = (subset << 1) | (1 << F)
        members = span & ~gaps
        if is_closed_mask(members, F):
            out.append(semigroup_from_mask(members, F))
    out.sort(key=lambda S: S.minimal_generators)
    return out


def symmetric_masks(F: int) -> Iterator[int]:
    """Membership bitsets (bits ``0..F``) of the symmetric semigroups with Frobenius number ``F``.

    Decides ``n = 1 .. (F-1)/2`` in ascending order, membership first. The
    lower half ``A`` determines everything: ``F - n`` is a member iff ``n`` is
    not. ``A`` must be closed under sums that stay in the lower half and no
    three members of ``A`` may sum to ``F``.
    """
    if F < 1 or F % 2 == 0:
        raise DomainError(f"symmetric semigroups have odd Frobenius number, got {F}")
    half = (F - 1) // 2
    in_a = [False] * (half + 1)
    chosen: list[int] = []

    def mask_of() -> int:
        mask = 1
        for n in range(1, half + 1):
            if in_a[n]:
                mask |= 1 << n
            else:
                mask |= 1 << (F - n)
        return mask

    def can_add(n: int) -> bool:
        target = F - n
        for a in chosen + [n]:
            b = target - a
            if b < a:
                break
            if b <= half and (in_a[b] or b == n):
                return False
        return True

    def forced(n: int) -> bool:
        for a in chosen:
            if 2 * a > n:
                break
            if in_a[n - a]:
                return True
        return False

    def rec(n: int) -> Iterator[int]:
        if n > half:
            yield mask_of()
            return
        if can_add(n):
            in_a[n] = True
            chosen.append(n)
            yield from rec(n + 1)
            chosen.pop()
            in_a[n] = False
        if not forced(n):
            yield from rec(n + 1)

    yield from rec(1)


def enumerate_symmetric_with_frobenius(F: int) -> list[NumericalSemigroup]:
    out = []
    for mask in symmetric_masks(F):
        gaps = [n for n in range(1, F + 1) if not (mask >> n) & 1]
        out.append(from_gap_set(gaps))
    return out


# -- census -------------------------------------------------------------------


def _checks(S: NumericalSemigroup, factors, ci: bool, length: int) -> dict[str, bool]:
    seq = exponent_sequence_from_factors(factors)
    gens = set(S.minimal_generators)
    mults = dict(factors)
    positive = [d for d in seq.positive_support() if d >= 2]
    return {
        "C1": ci,
        "C-length": S.embedding_dimension <= length + 1,
        "C-msg": set(seq.negative_support()) == gens,
        "C-maximalsD": all(d in mults and seq[d] <= mults[d] for d in positive),
    }


def census_record(S: NumericalSemigroup, factors: tuple[tuple[int, int], ...]) -> dict:
    """Census row for a cyclotomic semigroup with the given ``Phi_d`` multiplicities."""
    length = sum(m for _, m in factors)
    tree = is_complete_intersection(S)
    ci = tree is not None
    seq = exponent_sequence_from_factors(factors)
    return {
        "min_gens": list(S.minimal_generators),
        "frobenius": S.frobenius,
        "genus": S.genus,
        "e": S.embedding_dimension,
        "length": length,
        "factors": [[d, m] for d, m in factors],
        "ci": ci,
        "betti": tree.betti() if ci else None,
        "classification": str(classify_low_length(S)) if length <= 2 else None,
        "exponents": [[j, v] for j, v in sorted(seq.entries.items())],
        "checks": _checks(S, factors, ci, length),
    }


def census_frobenius(F: int) -> dict:
    """Census of one Frobenius value; the unit of parallel work and of checkpointing."""
    masks = list(symmetric_masks(F))
    rows = np.array([semigroup_polynomial_from_mask(m, F) for m in masks], dtype=np.int64)
    maybe = cyclotomic_part_bounds(rows) >= F + 1
    records = []
    ci_not_cyclotomic = []
    for mask, row, candidate in zip(masks, rows, maybe):
        if not is_closed_mask(mask, F):
            raise ArithmeticError(f"backtracker produced a non-closed set for F={F}")
        S = semigroup_from_mask(mask, F)
        fac = cyclotomic_factorization(IntPoly(int(a) for a in row)) if candidate else None
        if fac is not None and fac.cyclotomic:
            records.append(census_record(S, fac.factors))
        elif is_complete_intersection(S, verify=False) is not None:
            ci_not_cyclotomic.append(list(S.minimal_generators))
    records.sort(key=lambda r: r["min_gens"])
    return {
        "F": F,
        "symmetric": len(masks),
        "cyclotomic": len(records),
        "ci_not_cyclotomic": sorted(ci_not_cyclotomic),
        "records": records,
    }


@dataclass
class CensusReport:
    frobenius_max: int
    per_frobenius: list[dict] = field(default_factory=list)

    @property
    def records(self) -> list[dict]:
        return [r for block in self.per_frobenius for r in block["records"]]

    @property
    def counts(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for r in self.records:
            hist[r["length"]] = hist.get(r["length"], 0) + 1
        return dict(sorted(hist.items()))

    @property
    def total_cyclotomic(self) -> int:
        return sum(b["cyclotomic"] for b in self.per_frobenius)

    @property
    def total_symmetric(self) -> int:
        return sum(b["symmetric"] for b in self.per_frobenius)

    def restrict(self, frobenius_max: int) -> CensusReport:
        return CensusReport(frobenius_max, [b for b in self.per_frobenius if b["F"] <= frobenius_max])

    def conjecture_results(self, which: Iterable[str] = CONJECTURES) -> dict[str, dict]:
        out = {}
        for name in which:
            if name not in CONJECTURES:
                raise DomainError(f"unknown conjecture {name!r}")
            bad = [r["min_gens"] for r in self.records if not r["checks"][name]]
            checked = len(self.records)
            if name == "C1":
                # converse direction: complete intersections are cyclotomic
                bad += [g for b in self.per_frobenius for g in b["ci_not_cyclotomic"]]
            out[name] = {"verified": not bad, "checked": checked, "counterexamples": bad}
        return out

    def classification_violations(self) -> list[list[int]]:
        return [r["min_gens"] for r in self.records if r["classification"] == "VIOLATION"]

    def summary(self) -> dict:
        return {
            "frobenius_max": self.frobenius_max,
            "histogram": {str(k): v for k, v in self.counts.items()},
            "total_cyclotomic": self.total_cyclotomic,
            "total_symmetric": self.total_symmetric,
            "max_length": max(self.counts, default=0),
            "conjectures": {
                k: {"verified": v["verified"], "checked": v["checked"], "counterexamples": len(v["counterexamples"])}
                for k, v in self.conjecture_results().items()
            },
            "classification_violations": len(self.classification_violations()),
        }

    def table(self) -> str:
        counts = self.counts
        lengths = list(counts)
        head = ["Length"] + [str(k) for k in lengths]
        body = ["Number of semigroups"] + [str(counts[k]) for k in lengths]
        widths = [max(len(a), len(b)) for a, b in zip(head, body)]
        line1 = " | ".join(h.ljust(w) for h, w in zip(head, widths))
        line2 = " | ".join(b.ljust(w) for b, w in zip(body, widths))
        rule = "-+-".join("-" * w for w in widths)
        return f"{line1}\n{rule}\n{line2}\nTotal: {self.total_cyclotomic}"

    def write_csv(self, path: Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, delimiter=";", lineterminator="\n")
            writer.writerow(["min_gens", "frobenius", "genus", "length", "ci", "classification"])
            for r in self.records:
                writer.writerow([
                    ",".join(map(str, r["min_gens"])),
                    r["frobenius"],
                    r["genus"],
                    r["length"],
                    "true" if r["ci"] else "false",
                    r["classification"] or "",
                ])

    def write_summary(self, path: Path) -> None:
        Path(path).write_text(json.dumps(self.summary(), indent=2, sort_keys=True) + "\n")


def read_checkpoint(path: Path) -> dict[int, dict]:
    """Completed Frobenius blocks; a torn final line from an interrupted run is ignored."""
    done: dict[int, dict] = {}
    if not Path(path).exists():
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                block = json.loads(line)
            except json.JSONDecodeError:
                log.warning("skipping unreadable checkpoint line in %s", path)
                continue
            done[block["F"]] = block
    return done


def default_jobs() -> int:
    value = os.environ.get("CYCLOSEMI_JOBS")
    return max(1, int(value)) if value else 1


def cyclotomic_census(
    frobenius_max: int,
    jobs: int | None = None,
    checkpoint: Path | None = None,
    resume: bool = False,
    on_block: Callable[[dict], None] | None = None,
) -> CensusReport:
    """All cyclotomic numerical semigroups with Frobenius number at most ``frobenius_max``."""
    if frobenius_max < 1:
        raise DomainError(f"frobenius_max must be >= 1, got {frobenius_max}")
    jobs = default_jobs() if jobs is None else max(1, jobs)
    todo = list(range(1, frobenius_max + 1, 2))
    blocks: dict[int, dict] = {}
    if checkpoint is not None:
        checkpoint = Path(checkpoint)
        saved = read_checkpoint(checkpoint) if resume else {}
        # rewrite so a torn trailing line cannot swallow the next append
        checkpoint.write_text("".join(json.dumps(saved[F], sort_keys=True) + "\n" for F in sorted(saved)))
        blocks = {F: b for F, b in saved.items() if F in todo}
    todo = [F for F in todo if F not in blocks]

    def done(block: dict) -> None:
        blocks[block["F"]] = block
        if checkpoint is not None:
            with open(checkpoint, "a") as fh:
                fh.write(json.dumps(block, sort_keys=True) + "\n")
        if on_block is not None:
            on_block(block)

    if jobs == 1 or len(todo) <= 1:
        for F in todo:
            done(census_frobenius(F))
    else:
        # largest Frobenius values first: they dominate the running time
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(census_frobenius, F) for F in sorted(todo, reverse=True)]
            for fut in as_completed(futures):
                done(fut.result())
    return CensusReport(frobenius_max, [blocks[F] for F in sorted(blocks)])


def verify_conjectures(
    frobenius_max: int,
    which: Iterable[str] = CONJECTURES,
    report: CensusReport | None = None,
    **census_kwargs,
) -> dict[str, dict]:
    if report is None:
        report = cyclotomic_census(frobenius_max, **census_kwargs)
    elif report.frobenius_max != frobenius_max:
        report = report.restrict(frobenius_max)
    return report.conjecture_results(which)


def length_one_oracle(frobenius_max: int) -> list[list[int]]:
    """``<p, q>`` for primes ``p < q`` with ``(p - 1)(q - 1) <= frobenius_max + 1``."""
    from .arith import primes_up_to

    primes = primes_up_to(frobenius_max + 3)
    return [[p, q] for i, p in enumerate(primes) for q in primes[i + 1 :] if (p - 1) * (q - 1) <= frobenius_max + 1]


def length_from_betti(record: dict) -> int:
    """Length of a complete intersection from its Betti elements and generators."""
    return sum(divisor_count(b) for b in record["betti"]) - sum(divisor_count(n) for n in record["min_gens"]) + 1
