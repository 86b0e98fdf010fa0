from dataclasses import dataclass, field
from typing import Dict

from common.errors import ConfigError
from net.network import Network
from net.plan import ActivationPlan


@dataclass(frozen=True)
class EnergyReport:
    linecards_total: int
    linecards_inactive: int
    ports_total: int
    ports_inactive: int
    backbone_ports_total: int
    linecard_share: float
    energy_saving: float
    per_router: Dict[str, Dict[str, int]] = field(default_factory=dict)

    @property
    def linecard_fraction_off(self) -> float:
        return self.linecards_inactive / self.linecards_total if self.linecards_total else 0.0

    @property
    def port_fraction_off(self) -> float:
        return self.ports_inactive / self.ports_total if self.ports_total else 0.0

    def to_dict(self) -> dict:
        return {
            "linecards_total": self.linecards_total,
            "linecards_inactive": self.linecards_inactive,
            "linecard_fraction_off": self.linecard_fraction_off,
            "ports_total": self.ports_total,
            "ports_inactive": self.ports_inactive,
            "port_fraction_off": self.port_fraction_off,
            "backbone_ports_total": self.backbone_ports_total,
            "linecard_share": self.linecard_share,
            "energy_saving": self.energy_saving,
            "per_router": self.per_router,
        }


def energy_report(network: Network, plan: ActivationPlan, linecard_share: float = 0.8) -> EnergyReport:
    """
    节能比例 = linecard_share * 关闭线卡占比；机框等其余部分视为常开
    :param plan: 已经做过线卡打包的方案
    """
    if not 0 <= linecard_share <= 1:
        raise ConfigError("linecard_share must lie in [0, 1], got {}".format(linecard_share))
    per_router = {}
    for router in network.nodes:
        cards = network.linecards.get(router, ())
        endpoints = network.router_ports(router)
        per_router[router] = {
            "linecards_total": len(cards),
            "linecards_inactive": sum(1 for lc in cards if not plan.linecard_active(lc.id)),
            "port_endpoints_total": len(endpoints),
            "port_endpoints_inactive": sum(1 for p in endpoints if not plan.is_active(p.id)),
        }
    linecards_total = sum(r["linecards_total"] for r in per_router.values())
    linecards_inactive = sum(r["linecards_inactive"] for r in per_router.values())
    saving = linecard_share * (linecards_inactive / linecards_total) if linecards_total else 0.0
    return EnergyReport(
        linecards_total=linecards_total,
        linecards_inactive=linecards_inactive,
        ports_total=len(network.ports),
        ports_inactive=sum(1 for pid in network.ports if not plan.is_active(pid)),
        backbone_ports_total=len(network.backbone_ports()),
        linecard_share=linecard_share,
        energy_saving=saving,
        per_router=per_router,
    )
