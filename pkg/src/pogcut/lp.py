"""Exact two-phase simplex over ``fractions.Fraction`` with Bland's rule.

Variables must have finite lower bounds; they are shifted to zero and finite
upper bounds become extra rows.  Rows tagged ``nonneg`` are dropped since the
bounds already carry them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .model import InequalitySystem

Status = Literal["optimal", "unbounded", "infeasible"]


@dataclass(frozen=True)
class LpResult:
    status: Status
    value: Optional[Fraction] = None
    solution: Optional[tuple[Fraction, ...]] = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int], ncols: int):
        self.T = rows  # each row: ncols coefficients + rhs
        self.basis = basis
        self.ncols = ncols

    def pivot(self, r: int, c: int, obj: list[Fraction]) -> None:
        T = self.T
        prow = T[r]
        pv = prow[c]
        if pv != 1:
            prow[:] = [x / pv for x in prow]
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(T):
            if i != r and row[c]:
                f = row[c]
                for j in nz:
                    row[j] -= f * prow[j]
        if obj[c]:
            f = obj[c]
            for j in nz:
                obj[j] -= f * prow[j]
        self.basis[r] = c

    def reduced(self, cost: list[Fraction]) -> list[Fraction]:
        obj = list(cost) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.T[i]
                for j, x in enumerate(row):
                    if x:
                        obj[j] -= cb * x
        return obj

    def minimise(self, cost: list[Fraction], allowed: set[int]) -> tuple[bool, list[Fraction]]:
        """Run Bland pivots; returns (bounded, objective row)."""
        obj = self.reduced(cost)
        T = self.T
        while True:
            enter = next((j for j in range(self.ncols) if j in allowed and obj[j] < 0), None)
            if enter is None:
                return True, obj
            best = None
            for i, row in enumerate(T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False, obj
            self.pivot(best[1], enter, obj)


def solve_lp(
    sys: InequalitySystem,
    objective: Sequence,
    sense: Literal["max", "min"] = "max",
) -> LpResult:
    n = sys.num_vars
    if len(objective) != n:
        raise ValueError(f"objective needs {n} entries")
    if any(lo is None for lo in sys.lower):
        raise ValueError("every variable needs a finite lower bound")
    lo = [Fraction(v) for v in sys.lower]
    cons: list[tuple[dict[int, Fraction], str, Fraction]] = []
    for r in sys.rows:
        if r.tag == "nonneg":
            continue
        coeffs: dict[int, Fraction] = {}
        for v, c in r.coeffs:
            coeffs[v] = coeffs.get(v, Fraction(0)) + Fraction(c)
        rhs = Fraction(r.rhs) - sum(c * lo[v] for v, c in coeffs.items())
        cons.append((coeffs, r.rel, rhs))
    for v, hi in enumerate(sys.upper):
        if hi is not None:
            cons.append(({v: Fraction(1)}, "<=", Fraction(hi) - lo[v]))

    nslack = sum(1 for _, rel, _ in cons if rel == "<=")
    need_art = [rel == "=" or rhs < 0 for _, rel, rhs in cons]
    nart = sum(need_art)
    ncols = n + nslack + nart
    rows, basis = [], []
    s_idx, a_idx = n, n + nslack
    for (coeffs, rel, rhs), art in zip(cons, need_art):
        row = [Fraction(0)] * (ncols + 1)
        for v, c in coeffs.items():
            row[v] = c
        slack_col = None
        if rel == "<=":
            slack_col = s_idx
            row[s_idx] = Fraction(1)
            s_idx += 1
        row[-1] = rhs
        if rhs < 0:
            row = [-x for x in row]
        if art:
            row[a_idx] = Fraction(1)
            basis.append(a_idx)
            a_idx += 1
        else:
            basis.append(slack_col)
        rows.append(row)
    tab = _Tableau(rows, basis, ncols)
    arts = set(range(n + nslack, ncols))

    if nart:
        cost1 = [Fraction(0)] * ncols
        for j in arts:
            cost1[j] = Fraction(1)
        _, obj = tab.minimise(cost1, set(range(ncols)))
        if -obj[-1] != 0:
            return LpResult("infeasible")
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.T):
            if tab.basis[i] in arts:
                j = next((j for j in range(n + nslack) if tab.T[i][j] != 0), None)
                if j is None:
                    del tab.T[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j, [Fraction(0)] * (ncols + 1))
            i += 1

    sign = -1 if sense == "max" else 1
    cost2 = [Fraction(0)] * ncols
    for v in range(n):
        cost2[v] = sign * Fraction(objective[v])
    bounded, obj = tab.minimise(cost2, set(range(n + nslack)))
    if not bounded:
        return LpResult("unbounded")
    y = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        y[b] = tab.T[i][-1]
    x = tuple(lo[v] + y[v] for v in range(n))
    if not sys.feasible(x):
        raise AssertionError("simplex returned a point violating the system")
    value = sum(Fraction(objective[v]) * x[v] for v in range(n))
    return LpResult("optimal", value, x)
