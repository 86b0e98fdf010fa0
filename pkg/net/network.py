"""
Backbone network data model: routers, links made of parallel ports, paired arcs and linecards.
"""
import math
import numbers
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from common import const
from common.errors import NetworkError, UnknownArcError


@dataclass(frozen=True)
class Port:
    id: str
    link_id: str
    capacity: float
    endpoints: Tuple[str, str]
    role: str = const.BACKBONE

    @property
    def deactivatable(self) -> bool:
        return self.role == const.BACKBONE


@dataclass(frozen=True)
class Linecard:
    id: str
    router: str
    slots: int = 8
    energy: float = 1.0
    port_energy: float = 0.0


@dataclass(frozen=True)
class Arc:
    index: int
    id: str
    src: str
    dst: str
    link_id: str


@dataclass(frozen=True)
class Link:
    id: str
    u: str
    v: str
    port_ids: Tuple[str, ...]
    bandwidth: float
    arc_ids: Tuple[str, str]


class Network(object):
    """
    Directed multigraph G=(V, A). Every link owns two opposite arcs that share the link's port set,
    so both directions always have the same capacity. Instances are read-only once built;
    use NetworkBuilder to create them.
    """

    def __init__(self, nodes, links, arcs, ports, linecards, port_linecards, weights, coordinates=None):
        self.nodes: Tuple[str, ...] = tuple(nodes)
        self.links: Dict[str, Link] = dict(links)
        self.arcs: Tuple[Arc, ...] = tuple(arcs)
        self.ports: Dict[str, Port] = dict(ports)
        self.linecards: Dict[str, Tuple[Linecard, ...]] = {r: tuple(lcs) for r, lcs in linecards.items()}
        # (port_id, router) -> linecard_id
        self.port_linecards: Dict[Tuple[str, str], str] = dict(port_linecards)
        self.weights: Tuple[float, ...] = tuple(weights)
        self.coordinates: Dict[str, Tuple[float, float]] = dict(coordinates or {})
        self._arc_by_id = {a.id: a for a in self.arcs}
        self._node_set = frozenset(self.nodes)
        self._check()

    def _check(self):
        for arc in self.arcs:
            if arc.src not in self._node_set or arc.dst not in self._node_set:
                raise NetworkError("arc {} references unknown router".format(arc.id), arc=arc.id)
        for link in self.links.values():
            fwd, rev = (self.arc(a) for a in link.arc_ids)
            if (fwd.src, fwd.dst) != (rev.dst, rev.src):
                raise NetworkError("link {} arcs are not opposite".format(link.id), link=link.id)
            for pid in link.port_ids:
                if self.ports[pid].link_id != link.id:
                    raise NetworkError("port {} listed on link {} but belongs to {}".format(pid, link.id, self.ports[pid].link_id))
        for port in self.ports.values():
            if not port.capacity > 0:
                raise NetworkError("port {} capacity must be positive".format(port.id), port=port.id)
            for router in port.endpoints:
                if (port.id, router) not in self.port_linecards:
                    raise NetworkError("port {} endpoint at {} has no linecard".format(port.id, router), port=port.id)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def arc(self, arc_id) -> Arc:
        if isinstance(arc_id, Arc):
            return arc_id
        if isinstance(arc_id, numbers.Integral):
            if 0 <= arc_id < len(self.arcs):
                return self.arcs[arc_id]
            raise UnknownArcError("unknown arc index {}".format(arc_id), arc=arc_id)
        try:
            return self._arc_by_id[arc_id]
        except KeyError:
            raise UnknownArcError("unknown arc {}".format(arc_id), arc=arc_id)

    def reverse(self, arc_id) -> Arc:
        arc = self.arc(arc_id)
        fwd, rev = self.links[arc.link_id].arc_ids
        return self.arc(rev if arc.id == fwd else fwd)

    def link_of(self, arc_id) -> Link:
        return self.links[self.arc(arc_id).link_id]

    def link_ports(self, link_id) -> List[Port]:
        return [self.ports[pid] for pid in self.links[link_id].port_ids]

    def router_ports(self, router) -> List[Port]:
        return [p for p in self.ports.values() if router in p.endpoints]

    def all_linecards(self) -> List[Linecard]:
        return [lc for r in self.nodes for lc in self.linecards.get(r, ())]

    def backbone_ports(self) -> List[Port]:
        return [p for p in self.ports.values() if p.deactivatable]

    def total_bandwidth(self, link_id) -> float:
        return sum(p.capacity for p in self.link_ports(link_id))


def arc_capacity(network: Network, arc, plan=None) -> float:
    """
    c(a): sum of the capacities of the ports on the arc's link, only the active ones when a plan is given
    :param arc: arc id, index or Arc
    """
    link = network.link_of(arc)
    total = 0.0
    for pid in link.port_ids:
        if plan is None or plan.is_active(pid):
            total += network.ports[pid].capacity
    return total


class NetworkBuilder(object):
    def __init__(self, linecard_energy: float = 1.0, port_energy: float = 0.0):
        self._nodes: List[str] = []
        self._coordinates: Dict[str, Tuple[float, float]] = {}
        # (link_id, u, v, capacities, roles, weight_uv, weight_vu, bandwidth)
        self._links: List[tuple] = []
        self.linecard_energy = linecard_energy
        self.port_energy = port_energy

    def add_router(self, name: str, coordinates: Optional[Tuple[float, float]] = None):
        if name in self._coordinates or name in self._nodes:
            raise NetworkError("duplicate router {}".format(name), router=name)
        self._nodes.append(name)
        if coordinates is not None:
            self._coordinates[name] = coordinates
        return self

    def add_link(
        self,
        u: str,
        v: str,
        capacities: Sequence[float],
        weight_uv: float = 1.0,
        weight_vu: Optional[float] = None,
        roles: Optional[Sequence[str]] = None,
        bandwidth: Optional[float] = None,
        link_id: Optional[str] = None,
    ):
        if u == v:
            raise NetworkError("self loop at {}".format(u), router=u)
        for name in (u, v):
            if name not in self._nodes:
                raise NetworkError("link references unknown router {}".format(name), router=name)
        roles = list(roles) if roles is not None else [const.BACKBONE] * len(capacities)
        if len(roles) != len(capacities):
            raise NetworkError("roles and capacities differ in length on link {}-{}".format(u, v))
        for cap in capacities:
            if not cap > 0:
                raise NetworkError("port capacity must be positive on link {}-{}".format(u, v), capacity=cap)
        weight_vu = weight_uv if weight_vu is None else weight_vu
        if not (weight_uv > 0 and weight_vu > 0):
            raise NetworkError("IGP weights must be positive on link {}-{}".format(u, v))
        link_id = link_id or "L{}".format(len(self._links))
        if bandwidth is None:
            bandwidth = float(sum(capacities))
        self._links.append((link_id, u, v, [float(c) for c in capacities], roles, float(weight_uv), float(weight_vu), float(bandwidth)))
        return link_id

    def build(self, ports_per_linecard: int = 8) -> Network:
        if ports_per_linecard <= 0:
            raise NetworkError("ports_per_linecard must be positive")
        links, arcs, ports, weights = {}, [], {}, []
        seen = set()
        for link_id, u, v, caps, roles, w_uv, w_vu, bandwidth in self._links:
            if link_id in seen:
                raise NetworkError("duplicate link id {}".format(link_id), link=link_id)
            seen.add(link_id)
            port_ids = []
            for i, (cap, role) in enumerate(zip(caps, roles)):
                pid = "{}.p{}".format(link_id, i)
                ports[pid] = Port(pid, link_id, cap, (u, v), role)
                port_ids.append(pid)
            fwd = Arc(len(arcs), "{}:{}>{}".format(link_id, u, v), u, v, link_id)
            arcs.append(fwd)
            weights.append(w_uv)
            rev = Arc(len(arcs), "{}:{}>{}".format(link_id, v, u), v, u, link_id)
            arcs.append(rev)
            weights.append(w_vu)
            links[link_id] = Link(link_id, u, v, tuple(port_ids), bandwidth, (fwd.id, rev.id))

        linecards, port_linecards = allocate_linecards(self._nodes, ports.values(), ports_per_linecard, self.linecard_energy, self.port_energy)
        return Network(self._nodes, links, arcs, ports, linecards, port_linecards, weights, self._coordinates)


def allocate_linecards(nodes: Iterable[str], ports: Iterable[Port], ports_per_linecard: int, linecard_energy: float = 1.0, port_energy: float = 0.0):
    """
    每个路由器按 ceil(端口端点数 / ports_per_linecard) 分配线卡，端点按端口 id 顺序依次填充
    """
    endpoints: Dict[str, List[str]] = {n: [] for n in nodes}
    for port in sorted(ports, key=lambda p: p.id):
        for router in port.endpoints:
            endpoints[router].append(port.id)
    linecards, port_linecards = {}, {}
    for router, pids in endpoints.items():
        count = int(math.ceil(len(pids) / float(ports_per_linecard)))
        cards = [Linecard("{}.lc{}".format(router, i), router, ports_per_linecard, linecard_energy, port_energy) for i in range(count)]
        linecards[router] = cards
        for i, pid in enumerate(pids):
            port_linecards[(pid, router)] = cards[i // ports_per_linecard].id
    return linecards, port_linecards
