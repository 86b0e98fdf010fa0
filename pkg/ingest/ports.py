from typing import Optional

from common.errors import NetworkError
from common.log import logger
from net.network import Network, NetworkBuilder


def expand_ports(
    network: Network,
    ports_per_link: int,
    port_capacity: Optional[float] = None,
    ports_per_linecard: int = 8,
    linecard_energy: float = 1.0,
    port_energy: float = 0.0,
) -> Network:
    """
    每条链路拆成 ports_per_link 个并行端口，默认端口容量 = 链路带宽 / ports_per_link
    路由器、链路 id、弧顺序和 IGP 权重保持不变，线卡按端口端点数重新分配
    """
    if ports_per_link <= 0:
        raise NetworkError("ports_per_link must be positive, got {}".format(ports_per_link))
    if port_capacity is not None and not port_capacity > 0:
        raise NetworkError("port_capacity must be positive, got {}".format(port_capacity))
    builder = NetworkBuilder(linecard_energy, port_energy)
    for name in network.nodes:
        builder.add_router(name, network.coordinates.get(name))
    for link_id, link in network.links.items():
        if not link.bandwidth > 0:
            raise NetworkError("link {} ({}-{}) has zero bandwidth".format(link_id, link.u, link.v), link=link_id)
        fwd, rev = (network.arc(a) for a in link.arc_ids)
        capacity = port_capacity if port_capacity is not None else link.bandwidth / float(ports_per_link)
        builder.add_link(
            link.u,
            link.v,
            [capacity] * ports_per_link,
            weight_uv=network.weights[fwd.index],
            weight_vu=network.weights[rev.index],
            bandwidth=link.bandwidth,
            link_id=link_id,
        )
    expanded = builder.build(ports_per_linecard)
    logger.info("[Repetita] expanded {} links into {} ports, {} linecards".format(len(expanded.links), len(expanded.ports), len(expanded.all_linecards())))
    return expanded
