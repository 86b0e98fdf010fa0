from typing import Dict, List, Optional

from common import const
from common.errors import RoundingError
from common.log import logger
from evaluation.linecards import pack_linecards
from evaluation.mlu import ZERO_LOAD, utilization
from net.network import Network
from net.plan import ActivationPlan, validate_plan
from optimizer.configuration import SrConfiguration
from optimizer.params import OptimizationParams
from routing.fractions import FlowFractionTable
from routing.load import Routing, arc_traffic
from traffic.matrix import TrafficMatrix

# slack on utilization accepted when choosing ports, same order as the LP solver's primal tolerance
ROUND_TOL = 1e-7


def ports_needed(network: Network, link_id: str, need: float, theta: float) -> Dict[str, bool]:
    """
    链路所需的最少端口：接入端口常开并先计入容量，骨干端口按容量从大到小加入
    直到 need <= theta * 容量
    """
    ports = network.link_ports(link_id)
    states = {p.id: not p.deactivatable for p in ports}
    capacity = sum(p.capacity for p in ports if not p.deactivatable)
    if need <= ZERO_LOAD:
        return states
    for port in sorted((p for p in ports if p.deactivatable), key=lambda p: (-p.capacity, p.id)):
        if need <= (theta + ROUND_TOL) * capacity:
            break
        states[port.id] = True
        capacity += port.capacity
    if need > (theta + const.FEASIBILITY_TOL) * capacity:
        raise RoundingError(
            "link {} needs {:.6g} but all its ports give only {:.6g} at theta {}".format(link_id, need, theta * capacity, theta), link=link_id, need=need
        )
    return states


def round_ports(
    network: Network,
    fractional_solution: Routing,
    matrix: TrafficMatrix,
    table: FlowFractionTable,
    params: OptimizationParams,
    method: Optional[str] = None,
    status: str = const.STATUS_OPTIMAL,
    lp_objective: Optional[float] = None,
    warnings: Optional[List[str]] = None,
) -> SrConfiguration:
    """
    固定求解器给出的 x，按每条链路两个方向中较大的流量向上取整端口数，然后打包线卡并重新校验
    """
    loads = arc_traffic(table, matrix, fractional_solution)
    states: Dict[str, bool] = {}
    for link_id in sorted(network.links):
        link = network.links[link_id]
        fwd, rev = (network.arc(a) for a in link.arc_ids)
        states.update(ports_needed(network, link_id, max(loads[fwd.index], loads[rev.index]), params.theta))

    packing = pack_linecards(network, ActivationPlan(states), params.ports_per_linecard)
    violations = validate_plan(network, packing.plan)
    if violations:
        raise RoundingError("rounded plan violates {} rules, first: {}".format(len(violations), violations[0].message))
    report = utilization(network, packing.plan, loads)
    if report.mlu > params.theta + const.FEASIBILITY_TOL:
        raise RoundingError("rounded configuration reaches MLU {:.6f} above theta {}".format(report.mlu, params.theta))
    config = SrConfiguration(
        routing=fractional_solution,
        mode=params.mode,
        plan=packing.plan,
        arc_traffic=loads,
        utilization=report.utilization,
        mlu=report.mlu,
        theta=params.theta,
        method=method or params.method,
        status=status,
        lp_objective=lp_objective,
        warnings=list(warnings or []),
        ecmp_mode=table.ecmp_mode,
    )
    logger.debug("[2SRG] rounded: {}".format(config))
    return config
