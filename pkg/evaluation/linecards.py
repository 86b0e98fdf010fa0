from dataclasses import dataclass
from typing import Dict, Optional

from common.errors import PlanError
from common.log import logger
from net.network import Network
from net.plan import ActivationPlan


@dataclass(frozen=True)
class LinecardPacking:
    plan: ActivationPlan
    # per router
    inactive: Dict[str, int]
    total: Dict[str, int]

    @property
    def linecards_total(self) -> int:
        return sum(self.total.values())

    @property
    def linecards_inactive(self) -> int:
        return sum(self.inactive.values())


def pack_linecards(network: Network, plan: ActivationPlan, ports_per_linecard: Optional[int] = None) -> LinecardPacking:
    """
    每个路由器上 inactive 的骨干端口端点集中到前面的线卡，每满 ports_per_linecard 个即可关闭一块线卡
    :param ports_per_linecard: 默认取路由器线卡的槽位数
    :return: 带线卡状态和重新映射后端口 -> 线卡关系的方案
    """
    linecard_states: Dict[str, bool] = {}
    port_linecards: Dict = {}
    inactive_counts, totals = {}, {}
    for router in network.nodes:
        cards = network.linecards.get(router, ())
        totals[router] = len(cards)
        if not cards:
            inactive_counts[router] = 0
            continue
        per_card = ports_per_linecard or cards[0].slots
        ports = network.router_ports(router)
        idle = sorted(p.id for p in ports if p.deactivatable and not plan.is_active(p.id))
        busy = sorted(p.id for p in ports if not (p.deactivatable and not plan.is_active(p.id)))
        if len(idle) + len(busy) > per_card * len(cards):
            raise PlanError("router {} has {} port endpoints for {} linecards of {} slots".format(router, len(idle) + len(busy), len(cards), per_card), router=router)
        for i, pid in enumerate(idle + busy):
            port_linecards[(pid, router)] = cards[i // per_card].id
        off = len(idle) // per_card
        inactive_counts[router] = off
        for i, card in enumerate(cards):
            linecard_states[card.id] = i >= off
    packed = ActivationPlan(plan.port_states, linecard_states, port_linecards)
    logger.debug("[Baseline] packed linecards: {} of {} inactive".format(sum(inactive_counts.values()), sum(totals.values())))
    return LinecardPacking(packed, inactive_counts, totals)


def fixed_linecard_states(network: Network, plan: ActivationPlan) -> ActivationPlan:
    """keep the network's endpoint -> linecard mapping; a linecard is off when none of its ports is active"""
    used = {lc.id: False for lc in network.all_linecards()}
    for (pid, router), lc_id in network.port_linecards.items():
        if plan.is_active(pid):
            used[lc_id] = True
    return ActivationPlan(plan.port_states, used, None)
