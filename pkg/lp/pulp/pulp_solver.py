# encoding:utf-8

import time

import numpy as np

from common.errors import SolverError
from common.log import logger
from lp.model import BINARY, CONTINUOUS, EQ, GE, INFEASIBLE, LE, MAXIMIZE, OPTIMAL, TIME_LIMIT, UNBOUNDED, LpModel, LpSolution, SolveLimits
from lp.solver import Solver


# external CBC through pulp, only available when pulp is installed
class PulpSolver(Solver):
    name = "pulp"

    def __init__(self):
        try:
            import pulp
        except ImportError:
            raise SolverError("solver backend 'pulp' needs the pulp package: pip install pulp", backend=self.name)
        self.pulp = pulp

    def solve(self, model: LpModel, limits: SolveLimits = None) -> LpSolution:
        pulp = self.pulp
        limits = limits or SolveLimits()
        sense = pulp.LpMaximize if model.objective_sense == MAXIMIZE else pulp.LpMinimize
        prob = pulp.LpProblem(model.name.replace(" ", "_"), sense)
        variables = []
        for i, (lo, hi, kind) in enumerate(zip(model.lo, model.hi, model.kinds)):
            cat = pulp.LpContinuous if kind == CONTINUOUS else (pulp.LpBinary if kind == BINARY else pulp.LpInteger)
            variables.append(
                pulp.LpVariable("x{}".format(i), lowBound=lo if np.isfinite(lo) else None, upBound=hi if np.isfinite(hi) else None, cat=cat)
            )
        prob += pulp.lpSum(coef * variables[idx] for idx, coef in model.objective.items()) + model.objective_constant, "objective"

        A = model.constraint_matrix()
        for row, (sense_code, rhs) in enumerate(zip(model.senses, model.rhs)):
            start, end = A.indptr[row], A.indptr[row + 1]
            expr = pulp.lpSum(A.data[k] * variables[A.indices[k]] for k in range(start, end))
            if sense_code == LE:
                prob += expr <= rhs, "r{}".format(row)
            elif sense_code == GE:
                prob += expr >= rhs, "r{}".format(row)
            else:
                prob += expr == rhs, "r{}".format(row)

        solver = pulp.PULP_CBC_CMD(msg=False, timeLimit=limits.time_limit, gapRel=limits.mip_gap if model.is_mip else None)
        start_time = time.time()
        prob.solve(solver)
        stats = {"time": time.time() - start_time}

        status = self._status(prob)
        if status in (INFEASIBLE, UNBOUNDED):
            logger.info("[Pulp] {} finished with status {}".format(model.name, pulp.LpStatus[prob.status]))
            return LpSolution(status, None, None, stats)
        raw = [v.value() for v in variables]
        if any(v is None for v in raw):
            return LpSolution(TIME_LIMIT, None, None, stats)
        values = np.clip(np.array(raw, dtype=float), model.lo, model.hi)
        if status == TIME_LIMIT:
            logger.warning("[Pulp] {} hit the time limit, keeping the best solution found".format(model.name))
        return LpSolution(status, values, model.objective_value(values), stats)

    def _status(self, prob) -> str:
        pulp = self.pulp
        if prob.status == pulp.LpStatusOptimal:
            # CBC reports a feasible but unproven incumbent as optimal with sol_status 2
            if getattr(prob, "sol_status", pulp.LpSolutionOptimal) == pulp.LpSolutionIntegerFeasible:
                return TIME_LIMIT
            return OPTIMAL
        if prob.status == pulp.LpStatusInfeasible:
            return INFEASIBLE
        if prob.status == pulp.LpStatusUnbounded:
            return UNBOUNDED
        return TIME_LIMIT
