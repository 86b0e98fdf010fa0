# encoding:utf-8

import time

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from common.log import logger
from lp.model import INFEASIBLE, OPTIMAL, TIME_LIMIT, UNBOUNDED, LpModel, LpSolution, SolveLimits
from lp.solver import Solver


# HiGHS through scipy: linprog for pure LPs, milp when integrality is present
class HighsSolver(Solver):
    name = "highs"

    def solve(self, model: LpModel, limits: SolveLimits = None) -> LpSolution:
        limits = limits or SolveLimits()
        form = model.to_matrices()
        start = time.time()
        if model.is_mip:
            res = self._solve_milp(form, limits)
        else:
            res = self._solve_lp(form, limits)
        elapsed = time.time() - start
        status = self._status(res.status, res.x is not None)
        stats = {"time": elapsed, "iterations": int(getattr(res, "nit", 0) or 0)}
        if getattr(res, "mip_node_count", None) is not None:
            stats["nodes"] = int(res.mip_node_count)
        if res.x is None or status in (INFEASIBLE, UNBOUNDED):
            logger.info("[HiGHS] {} finished with status {} ({})".format(model.name, status, res.message))
            return LpSolution(status, None, None, stats)
        values = np.asarray(res.x, dtype=float)
        if model.is_mip:
            # HiGHS returns integers with tiny noise
            mask = form.integrality == 1
            values[mask] = np.round(values[mask])
        values = np.clip(values, form.lo, form.hi)
        if status == TIME_LIMIT:
            logger.warning("[HiGHS] {} hit the time limit of {}s, keeping the best solution found".format(model.name, limits.time_limit))
        return LpSolution(status, values, model.objective_value(values), stats)

    @staticmethod
    def _status(code: int, has_values: bool) -> str:
        if code == 0:
            return OPTIMAL
        if code == 2:
            return INFEASIBLE
        if code == 3:
            return UNBOUNDED
        if code == 1:
            return TIME_LIMIT
        # numerical trouble: keep what we got, re-substitution decides
        return TIME_LIMIT if has_values else INFEASIBLE

    @staticmethod
    def _solve_lp(form, limits):
        bounds = [(lo if np.isfinite(lo) else None, hi if np.isfinite(hi) else None) for lo, hi in zip(form.lo, form.hi)]
        return linprog(
            form.c,
            A_ub=form.A_ub if form.A_ub.shape[0] else None,
            b_ub=form.b_ub if form.A_ub.shape[0] else None,
            A_eq=form.A_eq if form.A_eq.shape[0] else None,
            b_eq=form.b_eq if form.A_eq.shape[0] else None,
            bounds=bounds,
            method="highs",
            options={"time_limit": float(limits.time_limit), "presolve": True},
        )

    @staticmethod
    def _solve_milp(form, limits):
        constraints = []
        if form.A_ub.shape[0]:
            constraints.append(LinearConstraint(form.A_ub, -np.inf, form.b_ub))
        if form.A_eq.shape[0]:
            constraints.append(LinearConstraint(form.A_eq, form.b_eq, form.b_eq))
        options = {"time_limit": float(limits.time_limit), "mip_rel_gap": float(limits.mip_gap), "presolve": True}
        if limits.node_limit:
            options["node_limit"] = int(limits.node_limit)
        return milp(form.c, integrality=form.integrality, bounds=Bounds(form.lo, form.hi), constraints=constraints, options=options)
