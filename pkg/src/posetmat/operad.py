"""Operad-axiom checking for the partial compositions.

Three axioms: nested associativity (A o_i B) o_{i+j-1} C = A o_i (B o_j C),
parallel associativity (A o_i B) o_{j+m-1} C = (A o_j C) o_i B for i < j,
and the unit law [1] o_1 A = A o_i [1] = A.

verify_laws sweeps each axiom exhaustively over all poset matrices up to a
given order (grouped by ascending total order so a reported counterexample
is minimal), or over seeded random samples from the same pools.  Boxed
kinds have partial domains; triples whose intermediate composition is
undefined are skipped and counted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .compose import compose, kind_name, parse_kind
from .core import PosetMatrix, UNIT
from .enumeration import generate_all
from .errors import IndexOutOfRange, PreconditionViolated, RequiresDistinctIndices

NESTED = "nested"
PARALLEL = "parallel"
UNIT_LAW = "unit"
LAWS = (NESTED, PARALLEL, UNIT_LAW)


@dataclass(frozen=True)
class Witness:
    """A failing instance with both evaluated sides, re-checkable as is."""

    a: PosetMatrix
    b: Optional[PosetMatrix]
    c: Optional[PosetMatrix]
    i: int
    j: Optional[int]
    left: PosetMatrix
    right: PosetMatrix


@dataclass(frozen=True)
class LawReport:
    law: str
    kind: str
    verdict: str  # "pass" | "fail"
    cases_checked: int
    cases_skipped: int
    witness: Optional[Witness]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        out = {
            "law": self.law,
            "op": self.kind,
            "verdict": self.verdict,
            "cases_checked": self.cases_checked,
            "cases_skipped": self.cases_skipped,
            "witness": None,
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "a": list(w.a.bit_rows()),
                "b": list(w.b.bit_rows()) if w.b is not None else None,
                "c": list(w.c.bit_rows()) if w.c is not None else None,
                "i": w.i,
                "j": w.j,
                "left": list(w.left.bit_rows()),
                "right": list(w.right.bit_rows()),
            }
        return out


def check_nested(kind, a, b, c, i, j):
    """Evaluate both sides of nested associativity; return (equal, left, right)."""
    if not 1 <= i <= a.n:
        raise IndexOutOfRange(f"i={i} outside [1,{a.n}]")
    if not 1 <= j <= b.n:
        raise IndexOutOfRange(f"j={j} outside [1,{b.n}]")
    left = compose(kind, compose(kind, a, i, b), i + j - 1, c)
    right = compose(kind, a, i, compose(kind, b, j, c))
    return left.rows == right.rows, left, right


def check_parallel(kind, a, b, c, i, j):
    """Evaluate both sides of parallel associativity; return (equal, left, right)."""
    if not (1 <= i <= a.n and 1 <= j <= a.n):
        raise IndexOutOfRange(f"(i,j)=({i},{j}) outside [1,{a.n}]")
    if i >= j:
        raise RequiresDistinctIndices(f"need i < j, got i={i}, j={j}")
    left = compose(kind, compose(kind, a, i, b), j + b.n - 1, c)
    right = compose(kind, compose(kind, a, j, c), i, b)
    return left.rows == right.rows, left, right


def check_unit(kind, a, i) -> bool:
    """True iff [1] o_1 A = A and A o_i [1] = A under kind."""
    if not 1 <= i <= a.n:
        raise IndexOutOfRange(f"i={i} outside [1,{a.n}]")
    return (
        compose(kind, UNIT, 1, a).rows == a.rows
        and compose(kind, a, i, UNIT).rows == a.rows
    )


def _enc(m) -> str:
    return "" if m is None else ";".join(m.bit_rows())


def _witness_key(w: Witness):
    return (_enc(w.a), _enc(w.b), _enc(w.c), w.i, w.j if w.j is not None else 0)


class _Tally:
    def __init__(self):
        self.checked = 0
        self.skipped = 0
        self.failures = []


def _run_case(kind, law, a, b, c, i, j, tally) -> None:
    try:
        if law == NESTED:
            equal, left, right = check_nested(kind, a, b, c, i, j)
        elif law == PARALLEL:
            equal, left, right = check_parallel(kind, a, b, c, i, j)
        else:
            equal = check_unit(kind, a, i)
            left = right = None
    except PreconditionViolated:
        tally.skipped += 1
        return
    tally.checked += 1
    if not equal:
        if law == UNIT_LAW:
            left = compose(kind, UNIT, 1, a)
            right = compose(kind, a, i, UNIT)
            tally.failures.append(Witness(a, None, None, i, None, left, right))
        else:
            tally.failures.append(Witness(a, b, c, i, j, left, right))


def _try(kind, a, i, b):
    try:
        return compose(kind, a, i, b)
    except PreconditionViolated:
        return None


@lru_cache(maxsize=1 << 18)
def _try_cached(kind, a, i, b):
    return _try(kind, a, i, b)


def _scan_nested(kind, As, Bs, Cs, n, m, tally) -> None:
    for a in As:
        for i in range(1, n + 1):
            for b in Bs:
                ab = _try(kind, a, i, b)
                for j in range(1, m + 1):
                    for c in Cs:
                        if ab is None:
                            tally.skipped += 1
                            continue
                        bc = _try_cached(kind, b, j, c)
                        if bc is None:
                            tally.skipped += 1
                            continue
                        left = _try(kind, ab, i + j - 1, c)
                        right = _try(kind, a, i, bc)
                        if left is None or right is None:
                            tally.skipped += 1
                            continue
                        tally.checked += 1
                        if left.rows != right.rows:
                            tally.failures.append(Witness(a, b, c, i, j, left, right))


def _scan_parallel(kind, As, Bs, Cs, n, m, tally) -> None:
    for a in As:
        for i in range(1, n):
            for b in Bs:
                ab = _try(kind, a, i, b)
                for j in range(i + 1, n + 1):
                    pos = j + m - 1
                    for c in Cs:
                        if ab is None:
                            tally.skipped += 1
                            continue
                        ac = _try_cached(kind, a, j, c)
                        if ac is None:
                            tally.skipped += 1
                            continue
                        left = _try(kind, ab, pos, c)
                        right = _try(kind, ac, i, b)
                        if left is None or right is None:
                            tally.skipped += 1
                            continue
                        tally.checked += 1
                        if left.rows != right.rows:
                            tally.failures.append(Witness(a, b, c, i, j, left, right))


def _exhaustive(kind, law, pools) -> LawReport:
    orders = sorted(pools)
    tally = _Tally()
    if law == UNIT_LAW:
        for n in orders:
            for a in pools[n]:
                for i in range(1, n + 1):
                    _run_case(kind, law, a, None, None, i, None, tally)
            if tally.failures:
                break
    else:
        scan = _scan_nested if law == NESTED else _scan_parallel
        top = orders[-1]
        for total in range(3, 3 * top + 1):
            for n in orders:
                for m in orders:
                    k = total - n - m
                    if k not in pools:
                        continue
                    scan(kind, pools[n], pools[m], pools[k], n, m, tally)
            if tally.failures:
                break
    return _report(kind, law, tally)


def _random(kind, law, pools, trials, seed) -> LawReport:
    rng = random.Random(seed)
    flat = [m for n in sorted(pools) for m in pools[n]]
    tally = _Tally()
    for _ in range(trials):
        a = rng.choice(flat)
        if law == UNIT_LAW:
            _run_case(kind, law, a, None, None, rng.randint(1, a.n), None, tally)
            continue
        b = rng.choice(flat)
        c = rng.choice(flat)
        if law == NESTED:
            _run_case(
                kind, law, a, b, c, rng.randint(1, a.n), rng.randint(1, b.n), tally
            )
        else:
            if a.n < 2:
                tally.skipped += 1
                continue
            i, j = sorted(rng.sample(range(1, a.n + 1), 2))
            _run_case(kind, law, a, b, c, i, j, tally)
    return _report(kind, law, tally)


def _report(kind, law, tally) -> LawReport:
    witness = min(tally.failures, key=_witness_key) if tally.failures else None
    return LawReport(
        law=law,
        kind=kind_name(kind),
        verdict="fail" if witness else "pass",
        cases_checked=tally.checked,
        cases_skipped=tally.skipped,
        witness=witness,
    )


def verify_laws(kind, max_order, trials=None, seed=0):
    """One LawReport per axiom; exhaustive when trials is None, else random.

    Exhaustive mode enumerates triples by ascending total order and stops a
    law's scan at the end of the first total-order group containing a
    counterexample, so the reported witness is minimal (smallest n+m+k,
    ties broken lexicographically on the matrix encodings).  Identical
    seeds give identical reports.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    _try_cached.cache_clear()
    pools = {n: generate_all(n) for n in range(1, max_order + 1)}
    if trials is None:
        return [_exhaustive(kind, law, pools) for law in LAWS]
    return [_random(kind, law, pools, trials, seed + t) for t, law in enumerate(LAWS)]


def reverify(report: LawReport) -> bool:
    """Re-evaluate a failed report's witness; True iff the inequality reproduces."""
    if report.witness is None:
        return False
    kind = parse_kind(report.kind)
    w = report.witness
    if report.law == UNIT_LAW:
        return not check_unit(kind, w.a, w.i)
    check = check_nested if report.law == NESTED else check_parallel
    equal, left, right = check(kind, w.a, w.b, w.c, w.i, w.j)
    return (not equal) and left == w.left and right == w.right
