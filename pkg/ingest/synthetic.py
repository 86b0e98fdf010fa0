"""
Synthetic instances. None of this is measured data: ISP-like topologies, diurnal traffic series
and small random instances used for acceptance and property tests.
"""
import math
from typing import Optional, Tuple

import networkx as nx
import numpy as np

from common import const
from common.errors import NetworkError
from common.log import logger
from net.network import Network, NetworkBuilder
from routing.fractions import compute_fractions
from routing.load import arc_traffic, shortest_path_routing
from traffic.matrix import TrafficMatrix, scale_matrix
from traffic.series import TrafficTimeSeries

SYNTHETIC_LABEL = "synthetic"


def spr_mlu(network: Network, matrix: TrafficMatrix, ecmp_mode: str = const.EVEN_SPLIT) -> float:
    table = compute_fractions(network, ecmp_mode=ecmp_mode)
    loads = arc_traffic(table, matrix, shortest_path_routing(matrix))
    capacities = [network.total_bandwidth(arc.link_id) for arc in network.arcs]
    return max((load / cap for load, cap in zip(loads, capacities) if cap > 0), default=0.0)


def scale_to_mlu(network: Network, matrix: TrafficMatrix, target: float, ecmp_mode: str = const.EVEN_SPLIT) -> TrafficMatrix:
    """MLU is linear in the matrix under fixed routing, one scaling step is exact"""
    current = spr_mlu(network, matrix, ecmp_mode)
    if current <= 0:
        return matrix
    return scale_matrix(matrix, target / current)


def _node_names(n: int):
    width = len(str(n - 1))
    return ["n{}".format(str(i).zfill(width)) for i in range(n)]


def random_instance(
    num_nodes: int,
    seed: int = 0,
    target_spr_mlu: float = 0.5,
    extra_links: Optional[int] = None,
    max_ports_per_link: int = 2,
    num_demands: Optional[int] = None,
    ports_per_linecard: int = 8,
    max_weight: int = 4,
    ports_per_link: Optional[int] = None,
) -> Tuple[Network, TrafficMatrix]:
    """
    随机连通实例：随机生成树加额外链路，端口数 1..max_ports_per_link，容量 1 或 2
    给定 ports_per_link 时每条链路都是 ports_per_link 个容量为 1 的端口 (与 Repetita 的拆分方式相同)
    需求缩放到最短路由下 MLU 等于 target_spr_mlu
    """
    if num_nodes < 2:
        raise NetworkError("a random instance needs at least 2 routers")
    rng = np.random.default_rng(seed)
    names = _node_names(num_nodes)
    edges = set()
    order = list(rng.permutation(num_nodes))
    for i in range(1, num_nodes):
        a, b = int(order[i]), int(order[int(rng.integers(0, i))])
        edges.add((min(a, b), max(a, b)))
    possible = num_nodes * (num_nodes - 1) // 2
    if extra_links is None:
        extra_links = num_nodes // 2
    extra_links = min(extra_links, possible - len(edges))
    while extra_links > 0:
        a, b = (int(v) for v in rng.choice(num_nodes, size=2, replace=False))
        edge = (min(a, b), max(a, b))
        if edge not in edges:
            edges.add(edge)
            extra_links -= 1

    builder = NetworkBuilder()
    for name in names:
        builder.add_router(name)
    for a, b in sorted(edges):
        if ports_per_link is None:
            ports = int(rng.integers(1, max_ports_per_link + 1))
            capacity = float(rng.choice([1.0, 2.0]))
        else:
            ports, capacity = ports_per_link, 1.0
        builder.add_link(names[a], names[b], [capacity] * ports, weight_uv=int(rng.integers(1, max_weight + 1)), weight_vu=int(rng.integers(1, max_weight + 1)))
    network = builder.build(ports_per_linecard)

    pairs = [(u, v) for u in names for v in names if u != v]
    if num_demands is None:
        num_demands = max(1, len(pairs) // 2)
    chosen = rng.choice(len(pairs), size=min(num_demands, len(pairs)), replace=False)
    matrix = TrafficMatrix({pairs[int(i)]: float(rng.uniform(0.1, 1.0)) for i in sorted(chosen)})
    return network, scale_to_mlu(network, matrix, target_spr_mlu)


def generate_isp_like(
    num_nodes: int,
    seed: int = 0,
    ports_per_link: int = 4,
    ports_per_linecard: int = 8,
    core_bandwidth: float = 400.0,
    edge_bandwidth: float = 100.0,
    target_spr_mlu: float = 0.5,
) -> Tuple[Network, TrafficMatrix]:
    """
    preferential-attachment backbone with planar coordinates, distance-based IGP weights,
    fatter links between well-connected routers and a gravity-model demand matrix
    """
    rng = np.random.default_rng(seed)
    graph = nx.barabasi_albert_graph(num_nodes, 2 if num_nodes > 2 else 1, seed=int(seed))
    names = _node_names(num_nodes)
    coords = {i: (float(rng.uniform(0, 100)), float(rng.uniform(0, 100))) for i in graph.nodes}
    degree = dict(graph.degree())
    hubs = {n for n, d in degree.items() if d >= 4}

    builder = NetworkBuilder()
    for i in sorted(graph.nodes):
        builder.add_router(names[i], coords[i])
    for a, b in sorted((min(e), max(e)) for e in graph.edges):
        weight = max(1, int(round(math.dist(coords[a], coords[b]) / 10.0)))
        bandwidth = core_bandwidth if a in hubs and b in hubs else edge_bandwidth
        builder.add_link(names[a], names[b], [bandwidth / ports_per_link] * ports_per_link, weight_uv=weight, bandwidth=bandwidth)
    network = builder.build(ports_per_linecard)

    mass = {n: float(rng.exponential(1.0)) * (1 + degree[i]) for i, n in enumerate(names)}
    matrix = TrafficMatrix({(u, v): mass[u] * mass[v] for u in names for v in names if u != v})
    matrix = scale_to_mlu(network, matrix, target_spr_mlu)
    logger.info("[Synthetic] ISP-like instance: {} routers, {} links, {} demands".format(len(network.nodes), len(network.links), len(matrix)))
    return network, matrix


def generate_traffic_series(days: int, seed: int = 0, slot_minutes: int = 15, amplitude: float = 0.9, phase: float = 0.0, noise: float = 0.05) -> TrafficTimeSeries:
    """Tr(t) = 1 + amplitude * sin(2 pi t / 24 + phase) + N(0, noise), t in hours"""
    rng = np.random.default_rng(seed)
    slots = 24 * 60 // slot_minutes
    hours = np.arange(slots) * slot_minutes / 60.0
    base = 1.0 + amplitude * np.sin(2 * np.pi * hours / 24.0 + phase)
    day_idx, slot_idx, values = [], [], []
    for day in range(days):
        sample = base + (rng.normal(0.0, noise, size=slots) if noise > 0 else 0.0)
        day_idx.extend([day] * slots)
        slot_idx.extend(range(slots))
        values.extend(float(v) for v in sample)
    return TrafficTimeSeries(day_idx, slot_idx, values, slot_minutes)


def steering_example() -> Tuple[Network, TrafficMatrix]:
    """
    six routers, one unit-capacity port per link; shortest paths push 0.6 onto B-E while
    steering A->F and B->F through C frees A-B, B-E and E-F
    """
    builder = NetworkBuilder()
    for name in "ABCDEF":
        builder.add_router(name)
    for u, v, weight in [("A", "B", 2), ("A", "C", 2), ("B", "E", 2), ("B", "C", 2), ("C", "D", 3), ("D", "E", 2), ("D", "F", 2), ("E", "F", 2)]:
        builder.add_link(u, v, [1.0], weight_uv=weight, link_id="{}-{}".format(u, v))
    network = builder.build()
    matrix = TrafficMatrix(
        {("A", "F"): 0.3, ("B", "F"): 0.3, ("A", "C"): 0.3, ("B", "C"): 0.1, ("C", "D"): 0.1, ("D", "F"): 0.1, ("D", "E"): 0.7}
    )
    return network, matrix
