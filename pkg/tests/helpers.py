"""Shared fixtures: golden matrices and brute-force sweep drivers."""

from posetmat import PosetMatrix, square_compose
from posetmat.duality import semi_equidual
from posetmat.enumeration import generate_all
from posetmat.structure import (
    classify_connectivity,
    insertion_invariance_condition,
    is_totally_connected,
    is_totally_disconnected,
    principal_subposet,
)


def pm(bits: str) -> PosetMatrix:
    return PosetMatrix.from_bits(bits)


def chain(n: int) -> PosetMatrix:
    return PosetMatrix._wrap(
        tuple((1,) * (i + 1) + (0,) * (n - i - 1) for i in range(n))
    )


def antichain(n: int) -> PosetMatrix:
    return PosetMatrix._wrap(
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def random_poset_matrix(rng, n: int) -> PosetMatrix:
    """Random member of PM(n): each new row is a random down-closed subset."""
    rows = []
    downsets = []
    for i in range(n):
        chosen = 0
        for j in range(i):
            if rng.random() < 0.4:
                chosen |= downsets[j]  # adding j pulls in its whole down-set
        rows.append(
            tuple((chosen >> j) & 1 for j in range(i)) + (1,) + (0,) * (n - i - 1)
        )
        downsets.append(chosen | (1 << i))
    return PosetMatrix(rows)


# The order-4 / order-3 / order-2 triple used across the composition and
# associativity examples, with its four displayed composites at position 2.
EX_A = pm("1000;1100;1010;1111")
EX_B = pm("100;110;101")
EX_C = pm("10;11")
EX_SQUARE = pm("100000;110000;111000;110100;100010;111111")
EX_MIN = pm("100000;110000;111000;110100;100010;110011")
EX_MAX = pm("100000;010000;111000;110100;100010;111111")
EX_MINMAX = pm("100000;010000;111000;110100;100010;110011")

# The two unequal nested-composition results for the minmax kind at i=2, j=3.
NESTED_LEFT = pm("1000000;0100000;1110000;0001000;1101100;1000010;1100011")
NESTED_RIGHT = pm("1000000;0100000;1110000;0001000;1101100;1000010;1101011")

# Worked min/max example: minimal elements 1,3; maximal 2,4; covers 2-1, 4-1, 4-3.
MINMAX_EXAMPLE = pm("1000;1100;0010;1011")

# Catalog of order-3 classes: three connected, two disconnected.
CONNECTED_3 = [pm("100;110;111"), pm("100;010;111"), pm("100;110;101")]
DISCONNECTED_3 = [pm("100;010;001"), pm("100;110;001")]

# Catalog of order-4 classes: ten connected, six disconnected.
CONNECTED_4 = [
    pm("1000;1100;1110;1101"),
    pm("1000;0100;1110;1111"),
    pm("1000;1100;1110;1111"),
    pm("1000;1100;1010;1111"),
    pm("1000;0100;1110;1101"),
    pm("1000;1100;1010;1001"),
    pm("1000;0100;0010;1111"),
    pm("1000;1100;0010;1111"),
    pm("1000;1100;1110;1001"),
    pm("1000;0100;1110;1001"),
]
DISCONNECTED_4 = [
    pm("1000;1100;0010;0011"),
    pm("1000;0100;0010;0001"),
    pm("1000;0100;0010;0011"),
    pm("1000;1100;1110;0001"),
    pm("1000;0100;0010;0111"),
    pm("1000;0100;0110;0101"),
]


def contiguous_ranges(n: int, min_len: int = 2):
    for d in range(1, n + 1):
        for k in range(d + min_len - 1, n + 1):
            yield tuple(range(d, k + 1))


def sweep_insertion_invariance(max_n: int = 5, max_m: int = 3):
    """Violations of the identical-insertion guarantee, under either pairing
    (totally connected block with a chain / totally disconnected block with
    an antichain) plus the flatness condition.  Expected empty."""
    violations = []
    for n in range(2, max_n + 1):
        for a in generate_all(n):
            a_connected = classify_connectivity(a).connected
            for alpha in contiguous_ranges(n):
                block = principal_subposet(a, alpha)
                pairings = []
                if a_connected and is_totally_connected(block):
                    pairings.append([chain(m) for m in range(1, max_m + 1)])
                if is_totally_disconnected(block):
                    pairings.append([antichain(m) for m in range(1, max_m + 1)])
                if not pairings or not insertion_invariance_condition(a, alpha):
                    continue
                for bs in pairings:
                    for b in bs:
                        first = square_compose(a, alpha[0], b)
                        if any(
                            square_compose(a, i, b) != first for i in alpha[1:]
                        ):
                            violations.append((a, alpha, b))
    return violations


def sweep_semi_equidual(max_n: int = 5, max_m: int = 3):
    """Violations of: a totally disconnected flat block makes the insertions
    at the block's two ends semi-equidual (chain inserted).  Expected empty."""
    violations = []
    for n in range(2, max_n + 1):
        for a in generate_all(n):
            for alpha in contiguous_ranges(n):
                block = principal_subposet(a, alpha)
                if not is_totally_disconnected(block):
                    continue
                if not insertion_invariance_condition(a, alpha):
                    continue
                for m in range(1, max_m + 1):
                    b = chain(m)
                    left = square_compose(a, alpha[0], b)
                    right = square_compose(a, alpha[-1], b)
                    if semi_equidual(left, right) is None:
                        violations.append((a, alpha, b))
    return violations
