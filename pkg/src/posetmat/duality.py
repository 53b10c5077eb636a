"""Flip-transpose duality: turning the Hasse diagram upside down.

The dual of A is E A^T E with E the backward identity, i.e. entry (i, j) of
the dual is A(n+1-j, n+1-i).  It is an involution, swaps minimal and
maximal elements, and interacts with the compositions by
(B square_i C)* = B* square_{n-i+1} C* and (B min_i C)* = B* max_{n-i+1} C*.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import PosetMatrix, principal_subposet
from .errors import IndexOutOfRange, OrderMismatch
from .structure import classify_connectivity


def dual(a: PosetMatrix) -> PosetMatrix:
    """Flip-transpose; entry (i,j) becomes a(n+1-j, n+1-i)."""
    n = a.n
    rows = tuple(
        tuple(a.rows[n - 1 - q][n - 1 - p] for q in range(n)) for p in range(n)
    )
    return PosetMatrix._wrap(rows)


def is_self_dual(a: PosetMatrix) -> bool:
    return dual(a).rows == a.rows


def dual_index_set(alpha, n: int) -> tuple:
    """{n-i+1 : i in alpha}, re-sorted."""
    alpha = tuple(alpha)
    for i in alpha:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside [1,{n}]")
    return tuple(sorted(n - i + 1 for i in alpha))


@dataclass(frozen=True)
class SemiEquidualWitness:
    """Index set on which the two matrices carry mutually dual disconnected
    blocks while agreeing everywhere outside the block region."""

    alpha: tuple
    block_a: PosetMatrix
    block_b: PosetMatrix


def semi_equidual(a: PosetMatrix, b: PosetMatrix):
    """Smallest (then lexicographically first) witness, or None.

    The relation is symmetric: a witness for (a, b) is one for (b, a).
    """
    if a.n != b.n:
        raise OrderMismatch(f"orders {a.n} and {b.n} differ")
    n = a.n
    diff = {
        (p, q)
        for p in range(n)
        for q in range(n)
        if a.rows[p][q] != b.rows[p][q]
    }
    for size in range(2, n + 1):
        for combo in combinations(range(1, n + 1), size):
            inside = set(combo)
            if any(p + 1 not in inside or q + 1 not in inside for p, q in diff):
                continue
            block_a = principal_subposet(a, combo)
            if classify_connectivity(block_a).connected:
                continue
            block_b = principal_subposet(b, combo)
            if dual(block_a).rows != block_b.rows:
                continue
            return SemiEquidualWitness(alpha=combo, block_a=block_a, block_b=block_b)
    return None


def self_dual_closure_counterexamples(max_order: int) -> list:
    """Sweep 'A square_i B self-dual iff A and B self-dual' over all pairs.

    The biconditional is false in both directions; this returns every
    disagreeing (a, i, b, composite) with the direction that broke, so the
    failures are reported as findings rather than crashing a sweep.
    """
    from .compose import square_compose
    from .enumeration import generate_all

    found = []
    pool = [m for n in range(1, max_order + 1) for m in generate_all(n)]
    for a in pool:
        sd_a = is_self_dual(a)
        for b in pool:
            both = sd_a and is_self_dual(b)
            for i in range(1, a.n + 1):
                comp = square_compose(a, i, b)
                if is_self_dual(comp) != both:
                    direction = "composite self-dual, factors not" if not both else (
                        "factors self-dual, composite not"
                    )
                    found.append((a, i, b, comp, direction))
    return found
