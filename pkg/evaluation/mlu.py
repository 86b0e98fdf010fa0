from dataclasses import dataclass
from typing import Optional

import numpy as np

from common import const
from common.errors import InconsistentPlanError
from net.network import Network
from net.plan import ActivationPlan
from routing.fractions import FlowFractionTable
from routing.load import arc_traffic
from traffic.matrix import TrafficMatrix

ZERO_LOAD = const.FEASIBILITY_TOL


@dataclass(frozen=True)
class MluReport:
    arc_traffic: np.ndarray
    capacities: np.ndarray
    utilization: np.ndarray
    mlu: float

    def worst_arcs(self, network: Network, top: int = 5):
        order = np.argsort(-self.utilization, kind="stable")[:top]
        return [(network.arcs[i].id, float(self.utilization[i])) for i in order]


def utilization(network: Network, plan: ActivationPlan, loads: np.ndarray) -> MluReport:
    """
    LU(a) = tr(a) / 激活容量；容量为 0 的弧不能有流量
    """
    capacities = np.array(plan.arc_capacities(network), dtype=float)
    loads = np.asarray(loads, dtype=float)
    lu = np.zeros(len(loads))
    for arc in network.arcs:
        i = arc.index
        if capacities[i] > 0:
            lu[i] = loads[i] / capacities[i]
        elif loads[i] > ZERO_LOAD:
            raise InconsistentPlanError(
                "arc {} carries {:.6g} traffic but all ports of link {} are inactive".format(arc.id, loads[i], arc.link_id), arc=arc.id, traffic=float(loads[i])
            )
    positive = capacities > 0
    mlu = float(lu[positive].max()) if positive.any() else 0.0
    return MluReport(loads, capacities, lu, mlu)


def evaluate_mlu(network: Network, configuration, matrix: Optional[TrafficMatrix] = None, table: Optional[FlowFractionTable] = None) -> MluReport:
    """
    :param matrix: 提供 matrix 和 table 时按路由重新计算负载，否则使用配置里保存的负载
    """
    if matrix is not None and table is not None:
        loads = arc_traffic(table, matrix, configuration.routing)
    else:
        loads = configuration.arc_traffic
    return utilization(network, configuration.plan, loads)
