"""Exact rational linear feasibility for open polyhedra.

Regions of a hyperplane arrangement are open sets cut out by strict
inequalities a.x > b with integer data.  Strict feasibility is decided by
maximizing the minimum slack tau = min_i (a_i.x - b_i) capped at 1: the
region is nonempty exactly when the optimum is positive, and the optimizer
is a rational interior witness.

The cap keeps the program bounded: substituting tau = 1 - s with s >= 0
turns it into minimizing s subject to a_i.x + s >= b_i + 1, which a primal
simplex solves without a separate feasibility phase (pivoting s into the
most violated row makes the starting basis feasible).  Pivots use the
integer-preserving (fraction-free) update, so all arithmetic is exact
integer arithmetic, and Bland's rule guarantees termination.

Rows are triples ``(coeffs, rhs, strict)``.  Strict rows participate in the
slack objective; weak rows (``strict=False``) only require a.x >= rhs and
must have rhs <= 0, which makes the s-pivot start feasible.  They exist for
recession-cone tests, where every bound is zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Row = tuple[Sequence[int], int, bool]


def _exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("fraction-free pivot produced a non-integer")
    return q


def max_slack(
    rows: Sequence[Row], n_vars: int
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Maximize the minimum slack of the strict rows, capped at 1.

    Returns ``(tau, witness)`` where every strict row has slack at least
    ``tau`` at the witness and every weak row is satisfied.  The system of
    strict inequalities is solvable iff ``tau > 0``.

    >>> tau, x = max_slack([((1, -1), 0, True), ((-1, 1), -3, True)], 2)
    >>> tau
    Fraction(1, 1)
    >>> x[0] - x[1]
    Fraction(1, 1)
    """
    for coeffs, rhs, strict in rows:
        if len(coeffs) != n_vars:
            raise ValueError("row length does not match the variable count")
        if not strict and rhs > 0:
            raise ValueError("weak rows must have nonpositive bounds")

    m = len(rows)
    # columns: s | u_1..u_n | v_1..v_n | w_1..w_m   (x = u - v, all >= 0)
    n_cols = 1 + 2 * n_vars + m
    w0 = 1 + 2 * n_vars

    strict_idx = [i for i, row in enumerate(rows) if row[2]]
    bounds = [rhs + 1 if strict else rhs for _, rhs, strict in rows]
    if not strict_idx or max(bounds[i] for i in strict_idx) <= 0:
        # x = 0 already has slack >= 1 on every strict row
        return Fraction(1), tuple(Fraction(0) for _ in range(n_vars))
    start = max(strict_idx, key=lambda i: bounds[i])

    # tableau rows in <=-with-slack form:  -sigma*s - a.u + a.v + w_i = -beta_i
    table: list[list[int]] = []
    for i, (coeffs, _, strict) in enumerate(rows):
        row = [0] * (n_cols + 1)
        row[0] = -1 if strict else 0
        for k, a in enumerate(coeffs):
            row[1 + k] = -a
            row[1 + n_vars + k] = a
        row[w0 + i] = 1
        row[n_cols] = -bounds[i]
        table.append(row)
    obj = [0] * (n_cols + 1)
    obj[0] = 1
    basis = [w0 + i for i in range(m)]
    det = 1

    # replace the most violated row by its >=-orientation and pivot s in by
    # hand; afterwards every right-hand side is nonnegative
    row = [0] * (n_cols + 1)
    row[0] = 1
    for k, a in enumerate(rows[start][0]):
        row[1 + k] = a
        row[1 + n_vars + k] = -a
    row[w0 + start] = -1
    row[n_cols] = bounds[start]
    table[start] = row
    for i in range(m):
        if i != start and rows[i][2]:
            table[i] = [x + y for x, y in zip(table[i], row)]
    obj = [x - y for x, y in zip(obj, row)]
    basis[start] = 0

    while True:
        enter = next((j for j in range(n_cols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            if table[i][enter] <= 0:
                continue
            if leave is None:
                leave = i
                continue
            lhs = table[i][n_cols] * table[leave][enter]
            rhs = table[leave][n_cols] * table[i][enter]
            if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                leave = i
        if leave is None:
            raise AssertionError("capped slack program cannot be unbounded")
        pivot = table[leave][enter]
        new_rows = []
        for i in range(m):
            if i == leave:
                new_rows.append(table[i])
                continue
            factor = table[i][enter]
            new_rows.append(
                [
                    _exact_div(pivot * x - factor * y, det)
                    for x, y in zip(table[i], table[leave])
                ]
            )
        factor = obj[enter]
        obj = [
            _exact_div(pivot * x - factor * y, det)
            for x, y in zip(obj, table[leave])
        ]
        table = new_rows
        basis[leave] = enter
        det = pivot

    values = {}
    for i in range(m):
        values[basis[i]] = Fraction(table[i][n_cols], det)
    s_value = values.get(0, Fraction(0))
    witness = tuple(
        values.get(1 + k, Fraction(0)) - values.get(1 + n_vars + k, Fraction(0))
        for k in range(n_vars)
    )
    return Fraction(1) - s_value, witness


class _OffsetUnionFind:
    """Union-find over variables related by differences x_i - x_j = c."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.offset = [0] * n  # x_i = x_root + offset_i

    def resolve(self, x: int) -> tuple[int, int]:
        root = x
        total = 0
        while self.parent[root] != root:
            total += self.offset[root]
            root = self.parent[root]
        # path compression with accumulated offsets
        node = x
        acc = total
        while self.parent[node] != node:
            nxt = self.parent[node]
            step = self.offset[node]
            self.parent[node] = root
            self.offset[node] = acc
            acc -= step
            node = nxt
        return root, total

    def merge(self, i: int, j: int, c: int) -> bool:
        """Impose x_i - x_j = c; False on contradiction."""
        ri, oi = self.resolve(i)
        rj, oj = self.resolve(j)
        if ri == rj:
            return oi - oj == c
        self.parent[rj] = ri
        self.offset[rj] = oi - c - oj
        return True


def strict_feasible(
    rows: Sequence[Row],
    n_vars: int,
    equalities: Sequence[tuple[int, int, int]] = (),
) -> Optional[tuple[Fraction, ...]]:
    """Witness for a system of strict/weak inequalities and difference
    equalities, or None.

    ``equalities`` entries ``(i, j, c)`` pin x_i - x_j = c exactly; they are
    eliminated by substitution before the linear program runs, so facets of
    arrangement regions can be tested without perturbing the hyperplane.
    """
    uf = _OffsetUnionFind(n_vars)
    for i, j, c in equalities:
        if not uf.merge(i, j, c):
            return None
    roots = sorted({uf.resolve(k)[0] for k in range(n_vars)})
    col = {r: t for t, r in enumerate(roots)}
    reduced: list[Row] = []
    for coeffs, rhs, strict in rows:
        acc = [0] * len(roots)
        shift = 0
        for k, a in enumerate(coeffs):
            if a:
                root, off = uf.resolve(k)
                acc[col[root]] += a
                shift += a * off
        bound = rhs - shift
        if any(acc):
            reduced.append((tuple(acc), bound, strict))
        elif (strict and bound >= 0) or (not strict and bound > 0):
            return None
    tau, reduced_witness = max_slack(reduced, len(roots))
    if tau <= 0:
        return None
    witness = []
    for k in range(n_vars):
        root, off = uf.resolve(k)
        witness.append(reduced_witness[col[root]] + off)
    return tuple(witness)


def integer_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of integer vectors, by fraction-free row
    elimination.

    >>> integer_rank([(1, -1, 0), (0, 1, -1), (1, 0, -1)])
    2
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    for c in range(n_cols):
        pivot_at = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot_at is None:
            continue
        rows[rank], rows[pivot_at] = rows[pivot_at], rows[rank]
        pivot = rows[rank][c]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][c]
            if factor:
                rows[i] = [
                    pivot * x - factor * y for x, y in zip(rows[i], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank
