"""Two-phase dense-tableau simplex over Fractions, with Bland's rule.

Solves::

    minimize    c . x
    subject to  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0

The problems in this package have a handful of variables, so the tableau
is a plain list of lists and nothing is vectorised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list[list[Fraction]]
        self.rhs = rhs  # list[Fraction]
        self.basis = basis  # list[int]

    def pivot(self, r: int, col: int, obj: list[Fraction], obj_val: list[Fraction]):
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            self.rows[r] = row = [v * inv if v else v for v in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                self.rows[i] = [a - f * b if b else a for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        f = obj[col]
        if f:
            for j, b in enumerate(row):
                if b:
                    obj[j] -= f * b
            obj_val[0] -= f * self.rhs[r]
        self.basis[r] = col

    def run(self, obj: list[Fraction], obj_val: list[Fraction], allowed: int) -> bool:
        """Minimise the reduced-cost row ``obj`` in place. False if unbounded.

        Only columns ``< allowed`` may enter the basis.
        """
        while True:
            col = next((j for j in range(allowed) if obj[j] < 0), None)
            if col is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], col, obj, obj_val)


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    n = len(c)
    c = [Fraction(v) for v in c]
    n_ub = len(A_ub)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    needs_artificial: list[int] = []
    # Columns: originals | slacks (one per <= row) | artificials.
    for i, (a, b) in enumerate(list(zip(A_ub, b_ub)) + list(zip(A_eq, b_eq))):
        if len(a) != n:
            raise ValueError("constraint row has wrong length")
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_ub
        b = Fraction(b)
        if i < n_ub:
            row[n + i] = Fraction(1)
        if b < 0:
            row = [-v for v in row]
            b = -b
        if i < n_ub and row[n + i] == 1:
            basis.append(n + i)
        else:
            basis.append(-1)
            needs_artificial.append(i)
        rows.append(row)
        rhs.append(b)
    n_rows = len(rows)
    real = n + n_ub
    width = real + len(needs_artificial)
    for row in rows:
        row.extend([Fraction(0)] * len(needs_artificial))
    for a_idx, i in enumerate(needs_artificial):
        rows[i][real + a_idx] = Fraction(1)
        basis[i] = real + a_idx
    tab = _Tableau(rows, rhs, basis)

    # Phase 1: minimise the sum of artificials.
    obj = [Fraction(0)] * width
    obj_val = [Fraction(0)]
    for j in range(real, width):
        obj[j] = Fraction(1)
    for i in needs_artificial:
        for j in range(width):
            obj[j] -= tab.rows[i][j]
        obj_val[0] -= tab.rhs[i]
    tab.run(obj, obj_val, width)
    if obj_val[0] != 0:
        return LPResult(INFEASIBLE)

    # Drive remaining (zero-level) artificials out of the basis.
    keep = []
    for i in range(n_rows):
        if tab.basis[i] >= real:
            col = next((j for j in range(real) if tab.rows[i][j] != 0), None)
            if col is None:
                continue  # redundant equality row
            tab.pivot(i, col, [Fraction(0)] * width, [Fraction(0)])
        keep.append(i)
    tab.rows = [tab.rows[i][:real] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    # Phase 2.
    cost = c + [Fraction(0)] * n_ub
    obj = list(cost)
    obj_val = [Fraction(0)]
    for i, bvar in enumerate(tab.basis):
        f = cost[bvar]
        if f:
            for j in range(real):
                obj[j] -= f * tab.rows[i][j]
            obj_val[0] -= f * tab.rhs[i]
    if not tab.run(obj, obj_val, real):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * real
    for i, bvar in enumerate(tab.basis):
        x[bvar] = tab.rhs[i]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    assert value == -obj_val[0]
    return LPResult(OPTIMAL, tuple(x[:n]), value)
