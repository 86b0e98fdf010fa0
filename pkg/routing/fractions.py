"""
All-pairs shortest-path flow fractions f_uw(a) under ECMP, and their two-segment sums g^w_uv(a).
"""
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from common import const
from common.errors import RoutingError
from common.log import logger
from net.network import Network

DIST_TOL = 1e-9


class FlowFractionTable(object):
    """
    Sparse table of f_uw(a): the share of one traffic unit from u to w that crosses arc a when
    following the IGP shortest paths. Only arcs on the (u, w) shortest-path DAG are stored.
    """

    def __init__(
        self,
        network: Network,
        weights: Sequence[float],
        ecmp_mode: str,
        fractions: Dict[Tuple[str, str], Dict[int, float]],
        distances: Dict[Tuple[str, str], float],
        unreachable: FrozenSet[Tuple[str, str]],
    ):
        self.network = network
        self.weights = tuple(weights)
        self.ecmp_mode = ecmp_mode
        self._fractions = fractions
        self._distances = distances
        self.unreachable = unreachable

    @property
    def num_arcs(self) -> int:
        return self.network.num_arcs

    @property
    def nodes(self) -> Tuple[str, ...]:
        return self.network.nodes

    def _arc_index(self, arc) -> int:
        return self.network.arc(arc).index

    def f(self, u: str, w: str, arc) -> float:
        if u == w:
            return 0.0
        return self._fractions.get((u, w), {}).get(self._arc_index(arc), 0.0)

    def vector(self, u: str, w: str) -> Mapping[int, float]:
        if u == w:
            return {}
        return self._fractions.get((u, w), {})

    def reachable(self, u: str, w: str) -> bool:
        return u == w or (u, w) in self._distances

    def distance(self, u: str, w: str) -> float:
        if u == w:
            return 0.0
        try:
            return self._distances[(u, w)]
        except KeyError:
            return float("inf")

    def path_arcs(self, u: str, w: str) -> List[int]:
        return sorted(self.vector(u, w))

    def __repr__(self):
        return "FlowFractionTable(nodes={}, arcs={}, ecmp_mode={}, unreachable={})".format(len(self.nodes), self.num_arcs, self.ecmp_mode, len(self.unreachable))


def _resolve_weights(network: Network, weights) -> List[float]:
    if weights is None:
        resolved = list(network.weights)
    elif isinstance(weights, Mapping):
        resolved = list(network.weights)
        for arc_id, w in weights.items():
            resolved[network.arc(arc_id).index] = float(w)
    else:
        resolved = [float(w) for w in weights]
        if len(resolved) != network.num_arcs:
            raise RoutingError("expected {} arc weights, got {}".format(network.num_arcs, len(resolved)))
    for arc, w in zip(network.arcs, resolved):
        if not w > 0:
            raise RoutingError("IGP weight of arc {} must be positive, got {}".format(arc.id, w), arc=arc.id)
    return resolved


def compute_fractions(network: Network, weights: Union[None, Sequence[float], Mapping[str, float]] = None, ecmp_mode: str = const.EVEN_SPLIT) -> FlowFractionTable:
    """
    对每个目的节点 w 建立最短路 DAG，再从每个源节点 u 沿 DAG 推送单位流量
    :param weights: IGP 权重，默认使用网络自带的权重
    :param ecmp_mode: even-split 在所有最短路下一跳上平分；single-path 只选节点 id 最小的下一跳
    """
    if ecmp_mode not in const.ECMP_MODES:
        raise RoutingError("unknown ecmp mode {}".format(ecmp_mode), ecmp_mode=ecmp_mode)
    weights = _resolve_weights(network, weights)

    graph = nx.MultiDiGraph()
    graph.add_nodes_from(network.nodes)
    for arc, w in zip(network.arcs, weights):
        graph.add_edge(arc.src, arc.dst, key=arc.index, weight=w)
    reverse = graph.reverse(copy=False)
    out_arcs: Dict[str, List] = {n: [] for n in network.nodes}
    for arc in network.arcs:
        out_arcs[arc.src].append(arc)

    fractions: Dict[Tuple[str, str], Dict[int, float]] = {}
    distances: Dict[Tuple[str, str], float] = {}
    unreachable = set()
    for target in network.nodes:
        dist = nx.single_source_dijkstra_path_length(reverse, target, weight="weight")
        next_hops = {}
        for node, d in dist.items():
            if node == target:
                continue
            hops = [a for a in out_arcs[node] if a.dst in dist and abs(weights[a.index] + dist[a.dst] - d) <= DIST_TOL * max(1.0, d)]
            if ecmp_mode == const.SINGLE_PATH:
                hops = [min(hops, key=lambda a: (a.dst, a.index))]
            next_hops[node] = hops
        order = sorted(dist, key=lambda n: (-dist[n], n))
        for source in network.nodes:
            if source == target:
                continue
            if source not in dist:
                unreachable.add((source, target))
                continue
            distances[(source, target)] = dist[source]
            fractions[(source, target)] = _push_unit_flow(source, target, order, next_hops)

    if unreachable:
        logger.warning("[SPR] {} ordered pairs are unreachable, e.g. {}".format(len(unreachable), sorted(unreachable)[:3]))
    logger.debug("[SPR] fractions computed for {} pairs, mode={}".format(len(fractions), ecmp_mode))
    return FlowFractionTable(network, weights, ecmp_mode, fractions, distances, frozenset(unreachable))


def _push_unit_flow(source, target, order, next_hops) -> Dict[int, float]:
    # 节点按到目的地距离从大到小处理，流入量在处理节点之前已经全部到达
    amounts = {source: 1.0}
    result: Dict[int, float] = {}
    for node in order[order.index(source):]:
        amount = amounts.pop(node, 0.0)
        if amount == 0.0:
            continue
        if node == target:
            break
        hops = next_hops[node]
        share = amount / len(hops)
        for arc in hops:
            result[arc.index] = result.get(arc.index, 0.0) + share
            amounts[arc.dst] = amounts.get(arc.dst, 0.0) + share
    return result


def two_segment_fraction(table: FlowFractionTable, u: str, v: str, w: str, arc) -> float:
    """g^w_uv(a) = f_uw(a) + f_wv(a); w == v is plain shortest-path routing"""
    if u == v:
        raise RoutingError("two-segment path needs u != v, got {}".format(u))
    if w == u:
        raise RoutingError("intermediate node must differ from the source {}".format(u))
    return table.f(u, w, arc) + table.f(w, v, arc)


def two_segment_vector(table: FlowFractionTable, u: str, v: str, w: str) -> Dict[int, float]:
    if u == v or w == u:
        raise RoutingError("invalid two-segment path {}->{} via {}".format(u, v, w))
    merged = dict(table.vector(u, w))
    for arc, share in table.vector(w, v).items():
        merged[arc] = merged.get(arc, 0.0) + share
    return merged
