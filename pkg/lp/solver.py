"""
LP / MILP solver abstract class
"""

from lp.model import LpModel, LpSolution, SolveLimits


class Solver(object):
    name = "abstract"

    def solve(self, model: LpModel, limits: SolveLimits = None) -> LpSolution:
        """
        solve the model
        :param model: the linear or mixed-integer program
        :param limits: time limit, relative mip gap, node limit
        :return: solution; infeasible / unbounded / time-limit are reported through its status
        """
        raise NotImplementedError
