from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from common import const
from net.network import Network
from net.plan import ActivationPlan
from routing.load import Routing


@dataclass
class SrConfiguration:
    """
    A static 2-SR configuration: per-demand splitting over intermediates plus the activation plan,
    with the per-arc load and utilization it produces.
    """

    routing: Routing
    mode: str
    plan: ActivationPlan
    arc_traffic: np.ndarray
    utilization: np.ndarray
    mlu: float
    theta: float
    method: str
    status: str = const.STATUS_OPTIMAL
    lp_objective: Optional[float] = None
    warnings: List[str] = field(default_factory=list)
    ecmp_mode: str = const.EVEN_SPLIT

    def intermediates(self, u: str, v: str) -> Dict[str, float]:
        return {w: x for w, x in self.routing.get((u, v), {}).items() if x > 0}

    def ports_active(self) -> int:
        return len(self.plan.active_ports())

    def ports_inactive(self) -> int:
        return len(self.plan.inactive_ports())

    def inactive_port_share(self) -> float:
        total = len(self.plan.port_states)
        return self.ports_inactive() / total if total else 0.0

    def steered_demands(self) -> List[Tuple[str, str]]:
        """demands that use at least one intermediate other than their destination"""
        return sorted(pair for pair, row in self.routing.items() if any(w != pair[1] and x > 0 for w, x in row.items()))

    def arc_loads(self, network: Network) -> Dict[str, float]:
        return {arc.id: float(self.arc_traffic[arc.index]) for arc in network.arcs}

    def arc_utilization(self, network: Network) -> Dict[str, float]:
        return {arc.id: float(self.utilization[arc.index]) for arc in network.arcs}

    def __repr__(self):
        return "SrConfiguration(method={}, mode={}, status={}, ports_active={}/{}, mlu={:.4f})".format(
            self.method, self.mode, self.status, self.ports_active(), len(self.plan.port_states), self.mlu
        )
