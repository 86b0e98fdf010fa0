"""
2SRG / 2SRG-NS pipeline: fractions -> port LP -> solve -> round -> evaluate.
"""
import math
from typing import Optional

from common import const
from common.errors import OptimizationError, OptimizationInfeasibleError, SolverError
from common.log import logger
from lp import model as lp_model
from lp.solver import Solver
from lp.solver_factory import solve
from net.network import Network
from optimizer.configuration import SrConfiguration
from optimizer.params import OptimizationParams
from optimizer.port_lp import build_port_lp, extract_routing
from optimizer.rounding import round_ports
from routing.fractions import FlowFractionTable, compute_fractions
from routing.load import arc_traffic, shortest_path_routing
from traffic.matrix import TrafficMatrix


def optimize(
    network: Network, matrix: TrafficMatrix, params: OptimizationParams = None, table: Optional[FlowFractionTable] = None, solver: Optional[Solver] = None
) -> SrConfiguration:
    """
    :param table: 已经在同一网络和权重上计算好的分流表，不传则重新计算
    :param solver: 复用的求解器实例，不传则按 params.solver_backend 创建
    :return: 满足 theta 的配置；求解超时则返回最好的可行解并标记 time-limit
    """
    params = params or OptimizationParams()
    if table is None:
        table = compute_fractions(network, ecmp_mode=params.ecmp_mode)
    model = build_port_lp(network, matrix, table, params)
    solution = solve(model, params.limits, solver or params.solver_backend)

    if solution.status == lp_model.INFEASIBLE:
        raise OptimizationInfeasibleError("no routing keeps every link under theta {} even with all ports active".format(params.theta), theta=params.theta)
    if solution.status == lp_model.UNBOUNDED:
        raise SolverError("port LP reported unbounded", model=model.name)
    if not solution.has_values:
        raise OptimizationError("solver hit the time limit of {}s without a feasible solution".format(params.limits.time_limit), time_limit=params.limits.time_limit)

    warnings = []
    status = const.STATUS_OPTIMAL
    if solution.status == lp_model.TIME_LIMIT:
        status = const.STATUS_TIME_LIMIT
        warnings.append("solver stopped at the time limit; configuration built from the best solution found")

    routing = extract_routing(model, solution, matrix, params.mode)
    config = round_ports(network, routing, matrix, table, params, status=status, lp_objective=solution.objective, warnings=warnings)

    if params.compare_with_spr:
        spr = _rounded_spr(network, matrix, table, params)
        if spr is not None and spr.ports_active() < config.ports_active():
            logger.info("[2SRG] shortest-path routing needs {} ports, rounded LP {}; keeping shortest paths".format(spr.ports_active(), config.ports_active()))
            config = round_ports(
                network,
                spr.routing,
                matrix,
                table,
                params,
                status=status,
                lp_objective=solution.objective,
                warnings=warnings + ["rounded shortest-path routing needed fewer ports than the rounded LP solution"],
            )

    bound = math.ceil(solution.objective - const.FEASIBILITY_TOL)
    if not params.port_integrality and config.ports_active() > bound:
        message = "rounded plan keeps {} ports, the LP lower bound allows {}; port_integrality may switch off more".format(config.ports_active(), bound)
        logger.warning("[2SRG] " + message)
        config.warnings.append(message)

    logger.info("[2SRG] {} (LP bound {:.4f})".format(config, solution.objective))
    return config


def _rounded_spr(network, matrix, table, params) -> Optional[SrConfiguration]:
    routing = shortest_path_routing(matrix)
    loads = arc_traffic(table, matrix, routing)
    for link in network.links.values():
        capacity = network.total_bandwidth(link.id)
        need = max(loads[network.arc(a).index] for a in link.arc_ids)
        if need > params.theta * capacity + const.FEASIBILITY_TOL * capacity:
            return None
    return round_ports(network, routing, matrix, table, params, method=params.method)
