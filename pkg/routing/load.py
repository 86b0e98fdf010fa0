from typing import Dict, Mapping, Tuple

import numpy as np

from common import const
from common.errors import RoutingError
from routing.fractions import FlowFractionTable
from traffic.matrix import TrafficMatrix

# (u, v) -> {w: x^w_uv}
Routing = Dict[Tuple[str, str], Dict[str, float]]


def shortest_path_routing(matrix: TrafficMatrix) -> Routing:
    """每个需求全部走 w = v，即普通最短路由"""
    return {(u, v): {v: 1.0} for (u, v), t in matrix.items() if t > 0}


def validate_routing(matrix: TrafficMatrix, x: Mapping[Tuple[str, str], Mapping[str, float]], tol: float = const.ROUTING_SUM_TOL):
    for (u, v), t in matrix.items():
        if t == 0:
            continue
        row = x.get((u, v))
        if row is None:
            raise RoutingError("demand {}->{} has no routing".format(u, v), demand=[u, v])
        for w, value in row.items():
            if w == u:
                raise RoutingError("demand {}->{} uses its own source as intermediate".format(u, v), demand=[u, v])
            if value < -tol:
                raise RoutingError("demand {}->{} has negative fraction {} via {}".format(u, v, value, w), demand=[u, v], via=w)
        total = sum(row.values())
        if abs(total - 1.0) > tol:
            raise RoutingError("fractions of demand {}->{} sum to {:.12g}, expected 1".format(u, v, total), demand=[u, v], total=total)


def arc_traffic(table: FlowFractionTable, matrix: TrafficMatrix, x: Mapping[Tuple[str, str], Mapping[str, float]]) -> np.ndarray:
    """
    tr(a) = sum_(u,v) sum_w t_uv * g^w_uv(a) * x^w_uv
    :return: 按弧序号排列的负载向量
    """
    validate_routing(matrix, x)
    loads = np.zeros(table.num_arcs)
    for (u, v), t in matrix.nonzero():
        for w, share in x[(u, v)].items():
            if share <= 0:
                continue
            amount = t * share
            if not (table.reachable(u, w) and table.reachable(w, v)):
                raise RoutingError("demand {}->{} routed via {} over an unreachable segment".format(u, v, w), demand=[u, v], via=w)
            for arc, f in table.vector(u, w).items():
                loads[arc] += amount * f
            for arc, f in table.vector(w, v).items():
                loads[arc] += amount * f
    return loads
