"""Connectivity, insertion invariance, disconnected decomposition, factorization.

A poset matrix is disconnected when some proper nonempty index set has all
zero cross entries against its complement; equivalently its comparability
graph is disconnected, which is what classify_connectivity computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .compose import MAX, MINMAX, Boxed, compose, square_compose
from .core import (
    BinaryMatrix,
    PosetMatrix,
    maximal_elements,
    principal_subposet,
    submatrix,
    validate,
)
from .errors import PreconditionViolated, ValidationError


@dataclass(frozen=True)
class ConnectivityClass:
    connected: bool
    witness: Optional[tuple]  # an isolated component when disconnected

    @property
    def kind(self) -> str:
        return "connected" if self.connected else "disconnected"


def components(a: PosetMatrix) -> tuple:
    """Connected components of the comparability graph, as sorted index tuples."""
    n = a.n
    nbr = [0] * n
    for i in range(n):
        for j in range(i):
            if a.rows[i][j]:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = [s]
        while frontier:
            x = frontier.pop()
            rest = nbr[x] & ~comp
            while rest:
                y = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                comp |= 1 << y
                frontier.append(y)
        seen |= comp
        comps.append(tuple(i + 1 for i in range(n) if (comp >> i) & 1))
    return tuple(comps)


def classify_connectivity(a: PosetMatrix) -> ConnectivityClass:
    """Connected/disconnected, with a smallest (then lex-least) component as witness."""
    comps = components(a)
    if len(comps) == 1:
        return ConnectivityClass(connected=True, witness=None)
    witness = min(comps, key=lambda c: (len(c), c))
    return ConnectivityClass(connected=False, witness=witness)


def is_totally_connected(a: PosetMatrix) -> bool:
    """Every entry on or below the diagonal is 1 (the chain matrix)."""
    return all(all(a.rows[i][: i + 1]) for i in range(a.n))


def is_totally_disconnected(a: PosetMatrix) -> bool:
    """Identity matrix (the antichain)."""
    return not any(any(a.rows[i][:i]) for i in range(a.n))


def equal_columns(d: BinaryMatrix) -> bool:
    """All columns pairwise equal; vacuously true with at most one column."""
    return all(
        all(r[c] == r[0] for c in range(1, d.width)) for r in d.rows
    )


def equal_rows(d: BinaryMatrix) -> bool:
    """All rows pairwise equal; vacuously true with at most one row."""
    return all(d.rows[r] == d.rows[0] for r in range(1, d.height))


def _contiguous(alpha) -> bool:
    return all(alpha[t + 1] == alpha[t] + 1 for t in range(len(alpha) - 1))


def insertion_invariance_class(a: PosetMatrix, alpha, b: PosetMatrix) -> bool:
    """True iff square insertion at every position of alpha gives one matrix.

    alpha must be a contiguous range over which a's principal block is
    totally connected (with b totally connected) or totally disconnected
    (with b totally disconnected).
    """
    alpha = tuple(alpha)
    if not alpha or not _contiguous(alpha):
        raise PreconditionViolated(f"alpha {alpha} is not a contiguous range")
    block = principal_subposet(a, alpha)
    if is_totally_connected(block) and is_totally_connected(b):
        pass
    elif is_totally_disconnected(block) and is_totally_disconnected(b):
        pass
    else:
        raise PreconditionViolated(
            "a[alpha] and b must both be totally connected or both totally disconnected"
        )
    first = square_compose(a, alpha[0], b)
    return all(square_compose(a, i, b) == first for i in alpha[1:])


def insertion_invariance_condition(a: PosetMatrix, alpha) -> bool:
    """Flatness condition making insertions over a contiguous alpha coincide.

    For alpha = {d,..,k}: the rows of a[alpha | 1..d-1] are all equal and the
    columns of a[k+1..n | alpha] are all equal.  For a prefix or suffix alpha
    one strip is empty and this is exactly the single stated strip condition.
    """
    alpha = tuple(alpha)
    d, k, n = alpha[0], alpha[-1], a.n
    if d > 1:
        left = submatrix(a, alpha, range(1, d))
        if not equal_rows(left):
            return False
    if k < n:
        below = submatrix(a, range(k + 1, n + 1), alpha)
        if not equal_columns(below):
            return False
    return True


def case3_literal_condition(a: PosetMatrix, alpha) -> bool:
    """Interior-range condition as literally stated: rows k..n over columns
    1..k-1 pairwise equal and each a constant vector.  Known to be weaker
    than insertion_invariance_condition; see case3_literal_discrepancies."""
    alpha = tuple(alpha)
    d, k, n = alpha[0], alpha[-1], a.n
    if not (1 < d < k < n):
        return False
    strip = submatrix(a, range(k, n + 1), range(1, k))
    if not equal_rows(strip):
        return False
    first = strip.rows[0]
    return all(x == first[0] for x in first)


def case3_literal_discrepancies(matrices, b: PosetMatrix) -> list:
    """Interior ranges passing the literal condition whose insertions differ.

    Returns (a, alpha) pairs; nonempty on PM(4) already, which is why the
    sweeps assert the flatness condition instead.
    """
    found = []
    connected_b = is_totally_connected(b)
    for a in matrices:
        n = a.n
        for d in range(2, n):
            for k in range(d + 1, n):
                alpha = tuple(range(d, k + 1))
                block = principal_subposet(a, alpha)
                if connected_b and not is_totally_connected(block):
                    continue
                if not connected_b and not (
                    is_totally_disconnected(b) and is_totally_disconnected(block)
                ):
                    continue
                if not case3_literal_condition(a, alpha):
                    continue
                first = square_compose(a, d, b)
                if any(square_compose(a, i, b) != first for i in alpha[1:]):
                    found.append((a, alpha))
    return found


def invariance_scan(a: PosetMatrix, b: PosetMatrix) -> tuple:
    """Maximal contiguous ranges (length >= 2) with identical square insertions."""
    n = a.n
    composites = [square_compose(a, i, b) for i in range(1, n + 1)]
    runs = []
    start = 0
    for i in range(1, n + 1):
        if i == n or composites[i] != composites[start]:
            if i - start >= 2:
                runs.append(tuple(range(start + 1, i + 1)))
            start = i
    return tuple(runs)


def dpm_check(a: PosetMatrix, b: PosetMatrix) -> bool:
    """Do 'every square insertion of b into a is disconnected' and
    'a is disconnected' agree for this pair?"""
    all_disconnected = all(
        not classify_connectivity(square_compose(a, i, b)).connected
        for i in range(1, a.n + 1)
    )
    a_disconnected = not classify_connectivity(a).connected
    return all_disconnected == a_disconnected


def decompose_disconnected(c: PosetMatrix):
    """Split a disconnected matrix into (G, H): G is the block on the
    component containing index 1, H the block on the rest.  None when
    connected."""
    comps = components(c)
    if len(comps) == 1:
        return None
    first = next(comp for comp in comps if 1 in comp)
    rest = tuple(i for i in range(1, c.n + 1) if i not in first)
    return principal_subposet(c, first), principal_subposet(c, rest)


def direct_sum(g: PosetMatrix, h: PosetMatrix) -> PosetMatrix:
    """Block-diagonal matrix with g before h."""
    gn, hn = g.n, h.n
    rows = [g.rows[p] + (0,) * hn for p in range(gn)]
    rows += [(0,) * gn + h.rows[p] for p in range(hn)]
    return PosetMatrix._wrap(tuple(rows))


def component_contiguous_form(c: PosetMatrix) -> PosetMatrix:
    """A permutation-equivalent relabelling listing each component contiguously."""
    from .enumeration import relabel

    order = [i for comp in components(c) for i in comp]
    return relabel(c, order)


@dataclass(frozen=True)
class Factorization:
    """a composed with b at position i under kind reproduces the source exactly."""

    a: PosetMatrix
    i: int
    b: PosetMatrix
    kind: object

    def recompose(self) -> PosetMatrix:
        return compose(self.kind, self.a, self.i, self.b)


def _collapse(c: PosetMatrix, i: int, m: int) -> PosetMatrix:
    """Principal block keeping rows/cols 1..i and i+m..N (the inserted block
    collapsed back to the single position i)."""
    keep = list(range(1, i + 1)) + list(range(i + m, c.n + 1))
    return principal_subposet(c, keep)


def factor(c: PosetMatrix, kind) -> tuple:
    """All ways of writing c as an insertion under kind with both factors
    of order at least 2.  Complete by exhaustive search over the block
    position and size; every emitted factorization recomposes exactly."""
    out = []
    big = c.n
    for m in range(2, big):  # factor orders n = big-m+1 and m are both >= 2
        n = big - m + 1
        for i in range(1, n + 1):
            b = principal_subposet(c, range(i, i + m))
            a = _factor_candidate(c, i, m, b, kind)
            if a is None:
                continue
            try:
                if compose(kind, a, i, b) == c:
                    out.append(Factorization(a=a, i=i, b=b, kind=kind))
            except PreconditionViolated:
                continue
    return tuple(out)


def _factor_candidate(c: PosetMatrix, i: int, m: int, b: PosetMatrix, kind):
    """The unique host that could produce c at this split, or None.

    Collapsing the guest block recovers every host entry except row/column
    i, which the masks overwrite: column i survives in the first guest
    column (element 1 is always minimal), but under the max-masked kinds
    the row prefix must be read off a maximal element's row, and the
    constant-fill kinds prescribe both outright.
    """
    if isinstance(kind, Boxed):
        base = list(_collapse(c, i, m).rows)
        base[i - 1] = (kind.u,) * (i - 1) + base[i - 1][i - 1 :]
        for s in range(i, len(base)):
            base[s] = base[s][: i - 1] + (kind.v,) + base[s][i:]
        return _validate_or_none(base)
    if kind in (MAX, MINMAX):
        j = maximal_elements(b)[0]
        base = list(_collapse(c, i, m).rows)
        base[i - 1] = c.rows[i + j - 2][: i - 1] + base[i - 1][i - 1 :]
        return _validate_or_none(base)
    return _collapse(c, i, m)


def _validate_or_none(rows):
    try:
        return validate(tuple(rows))
    except ValidationError:
        return None
