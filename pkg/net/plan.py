"""
Port / linecard activation plans and their validation.
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from common import const
from common.errors import PlanError
from net.network import Network, arc_capacity


@dataclass(frozen=True)
class Violation:
    rule: str
    subject: str
    message: str


# violation rules
RULE_PI_LEQ_LAMBDA = "pi<=lambda"
RULE_ACCESS_ALWAYS_ON = "access-always-on"
RULE_LINECARD_SLOTS = "linecard-slots"
RULE_MISSING_PORT = "missing-port"


class ActivationPlan(object):
    """
    One state per port (shared by both arcs of its link) and one per linecard.
    port_linecards overrides the network's endpoint -> linecard mapping after a remapping.
    """

    def __init__(
        self,
        port_states: Mapping[str, bool],
        linecard_states: Optional[Mapping[str, bool]] = None,
        port_linecards: Optional[Mapping[Tuple[str, str], str]] = None,
    ):
        self.port_states: Dict[str, bool] = {k: bool(v) for k, v in port_states.items()}
        self.linecard_states: Dict[str, bool] = {k: bool(v) for k, v in (linecard_states or {}).items()}
        self.port_linecards: Optional[Dict[Tuple[str, str], str]] = dict(port_linecards) if port_linecards is not None else None

    @classmethod
    def all_active(cls, network: Network) -> "ActivationPlan":
        return cls({pid: True for pid in network.ports}, {lc.id: True for lc in network.all_linecards()})

    def is_active(self, port_id) -> bool:
        return self.port_states.get(port_id, True)

    def linecard_active(self, linecard_id) -> bool:
        return self.linecard_states.get(linecard_id, True)

    def active_ports(self) -> List[str]:
        return sorted(pid for pid, on in self.port_states.items() if on)

    def inactive_ports(self) -> List[str]:
        return sorted(pid for pid, on in self.port_states.items() if not on)

    def linecard_of(self, network: Network, port_id: str, router: str) -> str:
        mapping = self.port_linecards if self.port_linecards is not None else network.port_linecards
        return mapping[(port_id, router)]

    def arc_capacities(self, network: Network) -> List[float]:
        return [arc_capacity(network, arc, self) for arc in network.arcs]

    def with_linecards(self, linecard_states, port_linecards=None) -> "ActivationPlan":
        return ActivationPlan(self.port_states, linecard_states, port_linecards if port_linecards is not None else self.port_linecards)

    def __eq__(self, other):
        if not isinstance(other, ActivationPlan):
            return NotImplemented
        return (self.port_states, self.linecard_states, self.port_linecards) == (other.port_states, other.linecard_states, other.port_linecards)

    def __repr__(self):
        return "ActivationPlan(ports_active={}/{}, linecards_active={}/{})".format(
            len(self.active_ports()),
            len(self.port_states),
            sum(1 for v in self.linecard_states.values() if v),
            len(self.linecard_states),
        )


def validate_plan(network: Network, plan: ActivationPlan) -> List[Violation]:
    """
    检查激活方案：端口所在线卡必须激活 (pi <= lambda)，接入端口必须常开，线卡端点数不超过槽位
    :return: 违规列表，为空表示方案合法
    """
    unknown = sorted(set(plan.port_states) - set(network.ports))
    if unknown:
        raise PlanError("plan references unknown ports: {}".format(", ".join(unknown)), ports=unknown)
    known_cards = {lc.id: lc for lc in network.all_linecards()}
    unknown_cards = sorted(set(plan.linecard_states) - set(known_cards))
    if unknown_cards:
        raise PlanError("plan references unknown linecards: {}".format(", ".join(unknown_cards)), linecards=unknown_cards)

    violations = []
    used_slots: Dict[str, int] = {}
    for pid in sorted(network.ports):
        port = network.ports[pid]
        if pid not in plan.port_states:
            violations.append(Violation(RULE_MISSING_PORT, pid, "port {} has no state in the plan".format(pid)))
            continue
        active = plan.port_states[pid]
        if port.role == const.ACCESS and not active:
            violations.append(Violation(RULE_ACCESS_ALWAYS_ON, pid, "access port {} must stay active".format(pid)))
        for router in port.endpoints:
            try:
                lc_id = plan.linecard_of(network, pid, router)
            except KeyError:
                raise PlanError("port {} endpoint at {} has no linecard in the plan mapping".format(pid, router), port=pid, router=router)
            if lc_id not in known_cards or known_cards[lc_id].router != router:
                raise PlanError("port {} endpoint at {} mapped to foreign linecard {}".format(pid, router, lc_id), port=pid)
            used_slots[lc_id] = used_slots.get(lc_id, 0) + 1
            if active and not plan.linecard_active(lc_id):
                violations.append(Violation(RULE_PI_LEQ_LAMBDA, pid, "port {} is active on inactive linecard {}".format(pid, lc_id)))
    for lc_id in sorted(used_slots):
        if used_slots[lc_id] > known_cards[lc_id].slots:
            violations.append(
                Violation(RULE_LINECARD_SLOTS, lc_id, "linecard {} hosts {} port endpoints but has {} slots".format(lc_id, used_slots[lc_id], known_cards[lc_id].slots))
            )
    return violations


def restrict_to_plan(network: Network, plan: ActivationPlan) -> Network:
    """Same routers, links, arcs and IGP weights, but only the plan's active ports."""
    links = {}
    for link_id, link in network.links.items():
        kept = tuple(pid for pid in link.port_ids if plan.is_active(pid))
        links[link_id] = type(link)(link.id, link.u, link.v, kept, link.bandwidth, link.arc_ids)
    ports = {pid: p for pid, p in network.ports.items() if plan.is_active(pid)}
    port_linecards = {(pid, r): plan.linecard_of(network, pid, r) for pid, p in ports.items() for r in p.endpoints}
    return Network(network.nodes, links, network.arcs, ports, network.linecards, port_linecards, network.weights, network.coordinates)
