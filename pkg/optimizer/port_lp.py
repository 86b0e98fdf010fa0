"""
Port-minimizing program over 2-SR splitting fractions.

    min  sum_p pi_p
    s.t. sum_w x^w_uv = 1                                     for every demand (u, v), t_uv > 0
         sum_(u,v,w) t_uv g^w_uv(a) x^w_uv <= theta sum_(p in P(a)) c_p pi_p   for every arc a
         x >= 0 (binary without splitting), 0 <= pi <= 1, access ports fixed at 1

Both arcs of a link read the same pi variables. Capacity rows are divided by the link's
total capacity so every row lives on a utilization scale.
"""
from typing import Dict, List, Tuple

import numpy as np

from common import const
from common.errors import InfeasibleDemandError
from common.log import logger
from lp.model import BINARY, CONTINUOUS, EQ, LE, MINIMIZE, LpModel, LpSolution
from net.network import Network
from optimizer.params import OptimizationParams
from routing.fractions import FlowFractionTable, two_segment_vector
from routing.load import Routing
from traffic.matrix import TrafficMatrix

X_CLEAN_TOL = 1e-7


def x_key(u: str, v: str, w: str) -> Tuple[str, str, str, str]:
    return ("x", u, v, w)


def pi_key(port_id: str) -> Tuple[str, str]:
    return ("pi", port_id)


def candidate_intermediates(network: Network, table: FlowFractionTable, u: str, v: str, params: OptimizationParams) -> List[str]:
    """w in V \\ {u}, always including v, whose two segments are both reachable"""
    pool = network.nodes if params.candidate_intermediates is None else [n for n in network.nodes if n in params.candidate_intermediates]
    candidates = [w for w in pool if w != u and w != v and table.reachable(u, w) and table.reachable(w, v)]
    return [v] + sorted(candidates)


def check_reachable(matrix: TrafficMatrix, table: FlowFractionTable):
    unreachable = [(u, v) for (u, v), _ in matrix.nonzero() if not table.reachable(u, v)]
    if unreachable:
        raise InfeasibleDemandError(
            "demand {}->{} has no path in the network".format(*unreachable[0]), demands=[list(p) for p in unreachable]
        )


def add_routing_block(model: LpModel, network: Network, matrix: TrafficMatrix, table: FlowFractionTable, params: OptimizationParams) -> Dict[int, Dict[int, float]]:
    """
    declares x and the per-demand sum-to-one rows
    :return: per arc, the load coefficient t_uv * g^w_uv(a) of every x variable
    """
    kind = BINARY if params.mode == const.NO_SPLITTING else CONTINUOUS
    loads: Dict[int, Dict[int, float]] = {arc.index: {} for arc in network.arcs}
    for (u, v), t in matrix.nonzero():
        row = {}
        for w in candidate_intermediates(network, table, u, v, params):
            idx = model.add_variable("x[{},{},{}]".format(u, v, w), 0.0, 1.0, kind, key=x_key(u, v, w))
            row[idx] = 1.0
            for arc, g in two_segment_vector(table, u, v, w).items():
                if g > 0:
                    loads[arc][idx] = loads[arc].get(idx, 0.0) + t * g
        model.add_constraint(row, EQ, 1.0, name="demand[{},{}]".format(u, v))
    return loads


def build_port_lp(network: Network, matrix: TrafficMatrix, table: FlowFractionTable, params: OptimizationParams) -> LpModel:
    check_reachable(matrix, table)
    model = LpModel("port-lp-{}".format(params.method))
    loads = add_routing_block(model, network, matrix, table, params)

    pi_kind = BINARY if params.port_integrality else CONTINUOUS
    for pid in sorted(network.ports):
        port = network.ports[pid]
        if port.deactivatable:
            model.add_variable("pi[{}]".format(pid), 0.0, 1.0, pi_kind, key=pi_key(pid))
        else:
            model.add_variable("pi[{}]".format(pid), 1.0, 1.0, CONTINUOUS, key=pi_key(pid))

    for arc in network.arcs:
        link = network.links[arc.link_id]
        total = sum(network.ports[pid].capacity for pid in link.port_ids)
        coeffs = dict(loads[arc.index])
        if total > 0:
            scale = 1.0 / total
        else:
            scale = 1.0 / max(coeffs.values()) if coeffs else 1.0
        coeffs = {idx: c * scale for idx, c in coeffs.items()}
        for pid in link.port_ids:
            coeffs[model.index_of(pi_key(pid))] = -params.theta * network.ports[pid].capacity * scale
        model.add_constraint(coeffs, LE, 0.0, name="capacity[{}]".format(arc.id))

    model.set_objective({model.index_of(pi_key(pid)): 1.0 for pid in network.ports}, MINIMIZE)
    logger.info("[LP] built {} with {} demands: {} variables, {} constraints".format(model.name, len(matrix.nonzero()), model.num_vars, model.num_constraints))
    return model


def extract_routing(model: LpModel, solution: LpSolution, matrix: TrafficMatrix, mode: str) -> Routing:
    """
    读取 x，去掉求解器噪声并重新归一化；不分流模式下每个需求只保留取值最大的中间节点
    """
    keys: Dict[Tuple[str, str], Dict[str, int]] = {}
    for key, idx in model.keys().items():
        if key[0] == "x":
            keys.setdefault((key[1], key[2]), {})[key[3]] = idx
    routing: Routing = {}
    for (u, v), _ in matrix.nonzero():
        values = {w: max(0.0, solution.value(idx)) for w, idx in keys[(u, v)].items()}
        if mode == const.NO_SPLITTING:
            best = max(sorted(values), key=lambda w: values[w])
            routing[(u, v)] = {best: 1.0}
            continue
        kept = {w: x for w, x in values.items() if x > X_CLEAN_TOL}
        total = sum(kept.values())
        routing[(u, v)] = {w: x / total for w, x in sorted(kept.items())}
    return routing


def fractional_ports(model: LpModel, solution: LpSolution, network: Network) -> Dict[str, float]:
    return {pid: solution.value(model.index_of(pi_key(pid))) for pid in sorted(network.ports)}


def link_port_sums(model: LpModel, solution: LpSolution, network: Network) -> Dict[str, float]:
    values = fractional_ports(model, solution, network)
    return {link_id: float(np.sum([values[pid] for pid in link.port_ids])) for link_id, link in network.links.items()}
