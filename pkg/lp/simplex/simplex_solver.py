# encoding:utf-8
"""
Dense two-phase tableau simplex (Bland's rule) with depth-first branch and bound for integer variables.
Meant for desk-scale models and as an independent cross-check of the HiGHS backend.
"""
import math
import time
from typing import List, Optional, Tuple

import numpy as np

from common.log import logger
from lp.model import INFEASIBLE, OPTIMAL, TIME_LIMIT, UNBOUNDED, LpModel, LpSolution, MatrixForm, SolveLimits
from lp.solver import Solver

EPS = 1e-9
INT_TOL = 1e-6
MAX_ITERATIONS = 100000


class _Deadline(Exception):
    pass


class SimplexSolver(Solver):
    name = "simplex"

    def __init__(self, max_iterations: int = MAX_ITERATIONS):
        self.max_iterations = max_iterations

    def solve(self, model: LpModel, limits: SolveLimits = None) -> LpSolution:
        limits = limits or SolveLimits()
        form = model.to_matrices()
        deadline = time.time() + limits.time_limit
        start = time.time()
        if not model.is_mip:
            status, x, iterations = self._relaxation(form, form.lo, form.hi, deadline)
            stats = {"time": time.time() - start, "iterations": iterations}
            if x is None:
                logger.info("[Simplex] {} finished with status {}".format(model.name, status))
                return LpSolution(status, None, None, stats)
            return LpSolution(status, x, model.objective_value(x), stats)
        return self._branch_and_bound(model, form, limits, deadline, start)

    def _branch_and_bound(self, model: LpModel, form: MatrixForm, limits: SolveLimits, deadline: float, start: float) -> LpSolution:
        integer_vars = np.flatnonzero(form.integrality == 1)
        lo = form.lo.copy()
        hi = form.hi.copy()
        lo[integer_vars] = np.ceil(lo[integer_vars] - INT_TOL)
        hi[integer_vars] = np.floor(hi[integer_vars] + INT_TOL)
        stack: List[Tuple[np.ndarray, np.ndarray]] = [(lo, hi)]
        incumbent: Optional[np.ndarray] = None
        best = math.inf
        nodes = iterations = 0
        hit_limit = False
        while stack:
            if time.time() > deadline or (limits.node_limit and nodes >= limits.node_limit):
                hit_limit = True
                break
            node_lo, node_hi = stack.pop()
            nodes += 1
            if np.any(node_lo > node_hi + EPS):
                continue
            status, x, it = self._relaxation(form, node_lo, node_hi, deadline)
            iterations += it
            if status == TIME_LIMIT:
                hit_limit = True
                break
            if status == UNBOUNDED and incumbent is None:
                return LpSolution(UNBOUNDED, None, None, {"time": time.time() - start, "iterations": iterations, "nodes": nodes})
            if status != OPTIMAL:
                continue
            bound = float(form.c @ x)
            if incumbent is not None and bound >= best - max(EPS, limits.mip_gap * abs(best)):
                continue
            fractional = [j for j in integer_vars if abs(x[j] - round(x[j])) > INT_TOL]
            if not fractional:
                x = x.copy()
                x[integer_vars] = np.round(x[integer_vars])
                incumbent, best = x, float(form.c @ x)
                continue
            j = fractional[0]
            up_lo = node_lo.copy()
            up_lo[j] = math.ceil(x[j])
            down_hi = node_hi.copy()
            down_hi[j] = math.floor(x[j])
            # 先探索向下的分支
            stack.append((up_lo, node_hi))
            stack.append((node_lo, down_hi))

        stats = {"time": time.time() - start, "iterations": iterations, "nodes": nodes}
        if incumbent is None:
            status = TIME_LIMIT if hit_limit else INFEASIBLE
            logger.info("[Simplex] {} branch and bound finished without incumbent, status {}".format(model.name, status))
            return LpSolution(status, None, None, stats)
        if hit_limit:
            logger.warning("[Simplex] {} stopped after {} nodes, keeping the best incumbent".format(model.name, nodes))
        return LpSolution(TIME_LIMIT if hit_limit else OPTIMAL, incumbent, model.objective_value(incumbent), stats)

    def _relaxation(self, form: MatrixForm, lo: np.ndarray, hi: np.ndarray, deadline: float) -> Tuple[str, Optional[np.ndarray], int]:
        """
        变量变换到 y >= 0：有下界 x = lo + y，只有上界 x = hi - y，自由变量 x = y+ - y-
        固定变量不生成列；有限的上界变成 y <= hi - lo 的约束行
        """
        n = len(lo)
        offset = np.zeros(n)
        columns = []  # (variable, sign)
        bound_rows = []  # (column, upper)
        for j in range(n):
            if np.isfinite(lo[j]) and np.isfinite(hi[j]) and hi[j] - lo[j] <= EPS:
                offset[j] = lo[j]
            elif np.isfinite(lo[j]):
                offset[j] = lo[j]
                columns.append((j, 1.0))
                if np.isfinite(hi[j]):
                    bound_rows.append((len(columns) - 1, hi[j] - lo[j]))
            elif np.isfinite(hi[j]):
                offset[j] = hi[j]
                columns.append((j, -1.0))
            else:
                columns.append((j, 1.0))
                columns.append((j, -1.0))
        k = len(columns)
        transform = np.zeros((n, k))
        for col, (j, sign) in enumerate(columns):
            transform[j, col] = sign

        A_ub = form.A_ub.toarray()
        A_eq = form.A_eq.toarray()
        le_rows = [A_ub @ transform]
        le_rhs = [form.b_ub - A_ub @ offset]
        if bound_rows:
            unit = np.zeros((len(bound_rows), k))
            for r, (col, _) in enumerate(bound_rows):
                unit[r, col] = 1.0
            le_rows.append(unit)
            le_rhs.append(np.array([upper for _, upper in bound_rows]))
        A_le = np.vstack(le_rows)
        b_le = np.concatenate(le_rhs)
        A_e = A_eq @ transform
        b_e = form.b_eq - A_eq @ offset
        cost = form.c @ transform

        try:
            status, y, iterations = _two_phase(A_le, b_le, A_e, b_e, cost, deadline, self.max_iterations)
        except _Deadline:
            return TIME_LIMIT, None, 0
        if y is None:
            return status, None, iterations
        x = offset + transform @ y
        return status, np.clip(x, lo, hi), iterations


def _two_phase(A_le, b_le, A_e, b_e, cost, deadline, max_iterations):
    """
    min cost @ y  s.t.  A_le y <= b_le, A_e y == b_e, y >= 0
    """
    m_le, k = A_le.shape
    m_e = A_e.shape[0]
    m = m_le + m_e
    if m == 0:
        if np.any(cost < -EPS):
            return UNBOUNDED, None, 0
        return OPTIMAL, np.zeros(k), 0

    # 列顺序: y | 松弛变量 | 人工变量
    A = np.zeros((m, k + m_le))
    A[:m_le, :k] = A_le
    A[:m_le, k:] = np.eye(m_le)
    A[m_le:, :k] = A_e
    b = np.concatenate([b_le, b_e])
    negative = b < 0
    A[negative] *= -1
    b[negative] *= -1

    basis = [-1] * m
    for i in range(m_le):
        if not negative[i]:
            basis[i] = k + i
    need_art = [i for i in range(m) if basis[i] < 0]
    n_struct = k + m_le
    T = np.zeros((m + 1, n_struct + len(need_art) + 1))
    T[:m, :n_struct] = A
    T[:m, -1] = b
    for a, i in enumerate(need_art):
        T[i, n_struct + a] = 1.0
        basis[i] = n_struct + a
    iterations = 0

    if need_art:
        for i in need_art:
            T[-1, :n_struct] -= T[i, :n_struct]
            T[-1, -1] -= T[i, -1]
        status, it = _iterate(T, basis, n_struct + len(need_art), deadline, max_iterations)
        iterations += it
        if status != OPTIMAL:
            return status, None, iterations
        if -T[-1, -1] > 1e-7 * max(1.0, float(np.abs(b).sum())):
            return INFEASIBLE, None, iterations
        # 把残留在基里的人工变量换出，换不出的行是冗余行
        keep = []
        for i in range(m):
            if basis[i] >= n_struct:
                candidates = np.flatnonzero(np.abs(T[i, :n_struct]) > EPS)
                if len(candidates):
                    _pivot(T, i, candidates[0])
                    basis[i] = int(candidates[0])
                    keep.append(i)
            else:
                keep.append(i)
        T = np.vstack([T[keep][:, list(range(n_struct)) + [T.shape[1] - 1]], np.zeros((1, n_struct + 1))])
        basis = [basis[i] for i in keep]

    c_full = np.concatenate([cost, np.zeros(m_le)])
    m2 = len(basis)
    c_basis = c_full[basis]
    T[-1, :n_struct] = c_full - c_basis @ T[:m2, :n_struct]
    T[-1, -1] = -(c_basis @ T[:m2, -1])
    status, it = _iterate(T, basis, n_struct, deadline, max_iterations)
    iterations += it
    if status != OPTIMAL:
        return status, None, iterations
    y = np.zeros(n_struct)
    for i, j in enumerate(basis):
        y[j] = T[i, -1]
    return OPTIMAL, np.maximum(y[:k], 0.0), iterations


def _iterate(T, basis, allowed, deadline, max_iterations):
    m = T.shape[0] - 1
    iterations = 0
    while True:
        reduced = T[-1, :allowed]
        entering = np.flatnonzero(reduced < -EPS)
        if not len(entering):
            return OPTIMAL, iterations
        j = int(entering[0])
        column = T[:m, j]
        positive = column > EPS
        if not positive.any():
            return UNBOUNDED, iterations
        ratios = np.full(m, np.inf)
        ratios[positive] = T[:m, -1][positive] / column[positive]
        best = ratios.min()
        ties = np.flatnonzero(ratios <= best + EPS * max(1.0, abs(best)))
        i = int(min(ties, key=lambda r: basis[r]))
        _pivot(T, i, j)
        basis[i] = j
        iterations += 1
        if iterations >= max_iterations:
            return TIME_LIMIT, iterations
        if iterations % 200 == 0 and time.time() > deadline:
            raise _Deadline()


def _pivot(T, row, col):
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])
