"""
solver factory
"""
import time

from common import const
from common.errors import SolverError
from common.log import logger
from lp.model import LpModel, LpSolution, SolveLimits, verify_solution


def create_solver(solver_type):
    """
    create a solver_type instance
    :param solver_type: solver backend code
    :return: solver instance
    """
    if solver_type == const.HIGHS:
        from lp.highs.highs_solver import HighsSolver

        return HighsSolver()
    elif solver_type == const.SIMPLEX:
        from lp.simplex.simplex_solver import SimplexSolver

        return SimplexSolver()
    elif solver_type == const.PULP:
        from lp.pulp.pulp_solver import PulpSolver

        return PulpSolver()
    raise SolverError("unknown solver backend {}".format(solver_type), backend=solver_type)


def solve(model: LpModel, limits: SolveLimits = None, backend=const.HIGHS) -> LpSolution:
    """
    求解并将解代回模型校验，后端的错误不会被静默传递
    :param backend: 后端代码或者已经创建好的 Solver 实例
    """
    solver = create_solver(backend) if isinstance(backend, str) else backend
    limits = limits or SolveLimits()
    start = time.time()
    solution = solver.solve(model, limits)
    solution.stats.setdefault("time", time.time() - start)
    solution.stats["backend"] = solver.name
    verify_solution(model, solution)
    logger.debug("[LP] {} solved by {}: {}".format(model, solver.name, solution))
    return solution
