"""The eleven partial compositions on poset matrices.

All of them replace the diagonal entry at position i of an order-n matrix A
with an order-m matrix B, producing an order n+m-1 matrix; they differ only
in how the m x (i-1) block U left of B and the (n-i) x m block V below B are
filled:

  square    U = m stacked copies of A's row prefix, V = m copies of its
            column suffix (full replication; an operad).
  min       U replicated, V copies the column only at B's minimal elements
            (an operad).
  max       U copies the row only at B's maximal elements, V replicated
            (an operad).
  minmax    U at maximal elements, V at minimal elements (closed, but not
            an operad: nested associativity fails).
  boxed(u, a21, v)
            U and V are constant fills, legal only when A's lower-left block
            has the constant fill a21; seven of the eight fill triples are
            admissible, (1,0,1) being the non-transitive forbidden pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BinaryMatrix, PosetMatrix, maximal_elements, minimal_elements
from .errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated

# Masks are ordinary bit grids; the mask builders below give them their shape.
MaskMatrix = BinaryMatrix

SQUARE = "square"
MIN = "min"
MAX = "max"
MINMAX = "minmax"

_ADMISSIBLE = {
    (1, 1, 1),
    (0, 1, 0),
    (1, 1, 0),
    (0, 1, 1),
    (0, 0, 0),
    (0, 0, 1),
    (1, 0, 0),
}


@dataclass(frozen=True)
class Boxed:
    """Constant-fill insertion (u, a21, v); (1, 0, 1) is unrepresentable."""

    u: int
    a21: int
    v: int

    def __post_init__(self):
        if (self.u, self.a21, self.v) not in _ADMISSIBLE:
            raise ValueError(
                f"fill triple ({self.u},{self.a21},{self.v}) is not one of the "
                f"seven admissible patterns"
            )


ALL_BOXED = tuple(Boxed(*t) for t in sorted(_ADMISSIBLE, reverse=True))
MASK_KINDS = (SQUARE, MIN, MAX, MINMAX)
ALL_KINDS = MASK_KINDS + ALL_BOXED

OPERAD_KINDS = (SQUARE, MIN, MAX)  # the three proven operads


def kind_name(kind) -> str:
    if isinstance(kind, Boxed):
        return f"boxed:{kind.u}{kind.a21}{kind.v}"
    return str(kind)


def parse_kind(name: str):
    """Inverse of kind_name; accepts square|min|max|minmax|boxed:UAV."""
    if name in MASK_KINDS:
        return name
    if name.startswith("boxed:") and len(name) == 9 and set(name[6:]) <= {"0", "1"}:
        return Boxed(int(name[6]), int(name[7]), int(name[8]))
    raise ValueError(f"unknown composition kind {name!r}")


def _check_position(a: PosetMatrix, i: int) -> None:
    if not 1 <= i <= a.n:
        raise IndexOutOfRange(f"position {i} outside [1,{a.n}]")


def insert(a: PosetMatrix, i: int, b: PosetMatrix, u: BinaryMatrix, v: BinaryMatrix) -> BinaryMatrix:
    """Raw block assembly; performs no validity check on the result."""
    n, m = a.n, b.n
    _check_position(a, i)
    if u.height != m or u.width != i - 1:
        raise DimensionMismatch(f"U is {u.height}x{u.width}, expected {m}x{i - 1}")
    if v.height != n - i or (v.height and v.width != m):
        raise DimensionMismatch(f"V is {v.height}x{v.width}, expected {n - i}x{m}")
    return BinaryMatrix(_assemble(a, i, b, u.rows, v.rows))


def _assemble(a: PosetMatrix, i: int, b: PosetMatrix, u_rows, v_rows):
    ar, n, m = a.rows, a.n, b.n
    mid_zero = (0,) * m
    tail_zero = (0,) * (n - i)
    out = [ar[p][: i - 1] + mid_zero + ar[p][i:] for p in range(i - 1)]
    out += [u_rows[q] + b.rows[q] + tail_zero for q in range(m)]
    out += [ar[s][: i - 1] + v_rows[s - i] + ar[s][i:] for s in range(i, n)]
    return tuple(out)


def _row_prefix(a: PosetMatrix, i: int):
    return a.rows[i - 1][: i - 1]


def _col_suffix(a: PosetMatrix, i: int):
    return tuple(a.rows[s][i - 1] for s in range(i, a.n))


def min_mask(a: PosetMatrix, i: int, b: PosetMatrix) -> BinaryMatrix:
    """(n-i) x m mask whose column j copies A's column suffix at B's minimal j."""
    _check_position(a, i)
    col = _col_suffix(a, i)
    mins = set(minimal_elements(b))
    rows = tuple(
        tuple(col[r] if j + 1 in mins else 0 for j in range(b.n))
        for r in range(len(col))
    )
    return BinaryMatrix(rows)


def max_mask(a: PosetMatrix, i: int, b: PosetMatrix) -> BinaryMatrix:
    """m x (i-1) mask whose row j copies A's row prefix at B's maximal j."""
    _check_position(a, i)
    row = _row_prefix(a, i)
    zero = (0,) * len(row)
    maxs = set(maximal_elements(b))
    rows = tuple(row if j + 1 in maxs else zero for j in range(b.n))
    return BinaryMatrix(rows)


def square_compose(a: PosetMatrix, i: int, b: PosetMatrix) -> PosetMatrix:
    _check_position(a, i)
    m = b.n
    row = _row_prefix(a, i)
    v_rows = tuple((c,) * m for c in _col_suffix(a, i))
    return PosetMatrix._wrap(_assemble(a, i, b, (row,) * m, v_rows))


def min_compose(a: PosetMatrix, i: int, b: PosetMatrix) -> PosetMatrix:
    _check_position(a, i)
    m = b.n
    row = _row_prefix(a, i)
    return PosetMatrix._wrap(_assemble(a, i, b, (row,) * m, min_mask(a, i, b).rows))


def max_compose(a: PosetMatrix, i: int, b: PosetMatrix) -> PosetMatrix:
    _check_position(a, i)
    m = b.n
    v_rows = tuple((c,) * m for c in _col_suffix(a, i))
    return PosetMatrix._wrap(_assemble(a, i, b, max_mask(a, i, b).rows, v_rows))


def minmax_compose(a: PosetMatrix, i: int, b: PosetMatrix) -> PosetMatrix:
    _check_position(a, i)
    return PosetMatrix._wrap(
        _assemble(a, i, b, max_mask(a, i, b).rows, min_mask(a, i, b).rows)
    )


def boxed_insert(a: PosetMatrix, i: int, b: PosetMatrix, kind: Boxed) -> PosetMatrix:
    """Constant-fill insertion; A's lower-left block must match kind.a21.

    The precondition is a condition on A, not a rewrite of it: a mismatched
    block is an error, never silently overwritten.  Empty blocks (i = 1 or
    i = n) satisfy either fill.
    """
    _check_position(a, i)
    n, m = a.n, b.n
    for s in range(i, n):
        for q in range(i - 1):
            if a.rows[s][q] != kind.a21:
                raise PreconditionViolated(
                    f"lower-left block of A at position {i} has entry "
                    f"{a.rows[s][q]} at ({s + 1},{q + 1}), expected constant {kind.a21}"
                )
    u_row = ((kind.u,) * (i - 1),) * m
    v_rows = (((kind.v,) * m),) * (n - i)
    return PosetMatrix._wrap(_assemble(a, i, b, u_row, v_rows))


def compose(kind, a: PosetMatrix, i: int, b: PosetMatrix) -> PosetMatrix:
    """Dispatch over the eleven composition kinds."""
    if kind == SQUARE:
        return square_compose(a, i, b)
    if kind == MIN:
        return min_compose(a, i, b)
    if kind == MAX:
        return max_compose(a, i, b)
    if kind == MINMAX:
        return minmax_compose(a, i, b)
    if isinstance(kind, Boxed):
        return boxed_insert(a, i, b, kind)
    raise ValueError(f"unknown composition kind {kind!r}")
