"""
Shortest-path routing baseline: keep the IGP routing and switch off every port a link can spare under theta.
"""
from common import const
from common.log import logger
from common.utils import leq_tol
from evaluation.linecards import pack_linecards
from evaluation.mlu import utilization
from net.network import Network
from net.plan import ActivationPlan
from optimizer.configuration import SrConfiguration
from routing.fractions import FlowFractionTable
from routing.load import arc_traffic, shortest_path_routing
from traffic.matrix import TrafficMatrix


def spr_baseline(network: Network, matrix: TrafficMatrix, table: FlowFractionTable, theta: float, ports_per_linecard: int = None) -> SrConfiguration:
    """
    路由固定为最短路；每条链路从容量最小的端口开始关闭，直到再关一个就会使任一方向超过 theta
    已经超过 theta 的链路不关闭端口，并在 warnings 中标出
    """
    routing = shortest_path_routing(matrix)
    loads = arc_traffic(table, matrix, routing)
    states = {}
    warnings = []
    for link_id in sorted(network.links):
        link = network.links[link_id]
        fwd, rev = (network.arc(a) for a in link.arc_ids)
        need = max(loads[fwd.index], loads[rev.index])
        ports = network.link_ports(link_id)
        for p in ports:
            states[p.id] = True
        capacity = sum(p.capacity for p in ports)
        if not leq_tol(need, theta * capacity):
            warnings.append("link {} ({}-{}) already exceeds theta under shortest paths: LU {:.4f}".format(link_id, link.u, link.v, need / capacity if capacity else float("inf")))
            continue
        for port in sorted((p for p in ports if p.deactivatable), key=lambda p: (p.capacity, p.id)):
            if leq_tol(need, theta * (capacity - port.capacity)):
                states[port.id] = False
                capacity -= port.capacity
            else:
                break

    for message in warnings:
        logger.warning("[Baseline] " + message)
    packing = pack_linecards(network, ActivationPlan(states), ports_per_linecard)
    report = utilization(network, packing.plan, loads)
    config = SrConfiguration(
        routing=routing,
        mode=const.SPLITTING,
        plan=packing.plan,
        arc_traffic=loads,
        utilization=report.utilization,
        mlu=report.mlu,
        theta=theta,
        method=const.METHOD_SPR,
        status=const.STATUS_INFEASIBLE_BASELINE if warnings else const.STATUS_OPTIMAL,
        warnings=warnings,
        ecmp_mode=table.ecmp_mode,
    )
    logger.info("[Baseline] {}".format(config))
    return config
