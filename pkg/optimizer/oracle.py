"""
Exact optimum on tiny instances: enumerate port activation subsets in ascending objective order
and return the first one whose routing feasibility LP has a solution.
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from common import const
from common.errors import ConfigError, InstanceTooLargeError, OptimizationInfeasibleError
from common.log import logger
from evaluation.linecards import fixed_linecard_states, pack_linecards
from evaluation.mlu import utilization
from lp import model as lp_model
from lp.model import LE, MINIMIZE, LpModel
from lp.solver import Solver
from lp.solver_factory import create_solver, solve
from net.network import Network
from net.plan import ActivationPlan
from optimizer.configuration import SrConfiguration
from optimizer.params import OptimizationParams
from optimizer.port_lp import add_routing_block, candidate_intermediates, check_reachable, extract_routing
from routing.fractions import FlowFractionTable, compute_fractions, two_segment_vector
from routing.load import arc_traffic
from traffic.matrix import TrafficMatrix


def plan_energy(network: Network, plan: ActivationPlan) -> float:
    """sum of E_l over active linecards plus E_p for every active port endpoint"""
    total = 0.0
    cards = {lc.id: lc for lc in network.all_linecards()}
    for lc in cards.values():
        if plan.linecard_active(lc.id):
            total += lc.energy
    for pid, port in network.ports.items():
        if plan.is_active(pid):
            for router in port.endpoints:
                total += cards[plan.linecard_of(network, pid, router)].port_energy
    return total


def _subset_plan(network: Network, active: Sequence[str], params: OptimizationParams) -> ActivationPlan:
    active = set(active)
    states = {pid: (not p.deactivatable) or pid in active for pid, p in network.ports.items()}
    plan = ActivationPlan(states)
    if params.fixed_mapping:
        return fixed_linecard_states(network, plan)
    return pack_linecards(network, plan, params.ports_per_linecard).plan


def _routable(network: Network, matrix: TrafficMatrix, table: FlowFractionTable, plan: ActivationPlan, params: OptimizationParams) -> bool:
    """necessary condition: every demand has a candidate whose two segments avoid dead links"""
    dead = {arc.index for arc in network.arcs if not any(plan.is_active(pid) for pid in network.links[arc.link_id].port_ids)}
    if not dead:
        return True
    for (u, v), _ in matrix.nonzero():
        if not any(dead.isdisjoint(two_segment_vector(table, u, v, w)) for w in candidate_intermediates(network, table, u, v, params)):
            return False
    return True


def feasibility_lp(network: Network, matrix: TrafficMatrix, table: FlowFractionTable, plan: ActivationPlan, params: OptimizationParams) -> LpModel:
    """
    端口状态固定时的路由可行性问题，目标为最小化总流量 sum tr(a)
    """
    model = LpModel("oracle-feasibility")
    loads = add_routing_block(model, network, matrix, table, params)
    objective: Dict[int, float] = {}
    for arc in network.arcs:
        capacity = sum(network.ports[pid].capacity for pid in network.links[arc.link_id].port_ids if plan.is_active(pid))
        coeffs = loads[arc.index]
        for idx, c in coeffs.items():
            objective[idx] = objective.get(idx, 0.0) + c
        if not coeffs:
            continue
        scale = 1.0 / capacity if capacity > 0 else 1.0 / max(coeffs.values())
        model.add_constraint({idx: c * scale for idx, c in coeffs.items()}, LE, params.theta * capacity * scale, name="capacity[{}]".format(arc.id))
    model.set_objective(objective, MINIMIZE)
    return model


def exact_oracle(
    network: Network,
    matrix: TrafficMatrix,
    params: OptimizationParams = None,
    objective: str = const.OBJECTIVE_LINECARDS,
    table: Optional[FlowFractionTable] = None,
    solver: Optional[Solver] = None,
) -> SrConfiguration:
    """
    :param objective: linecards 为线卡能耗目标 (sum E_l + sum E_p)，ports 为激活端口数
    """
    params = params or OptimizationParams()
    if objective not in (const.OBJECTIVE_LINECARDS, const.OBJECTIVE_PORTS):
        raise ConfigError("unknown oracle objective {}".format(objective), objective=objective)
    backbone = sorted(p.id for p in network.backbone_ports())
    if len(network.nodes) > params.oracle_max_nodes or len(backbone) > params.oracle_max_ports:
        raise InstanceTooLargeError(
            "exact oracle handles at most {} nodes and {} backbone ports, got {} and {}".format(params.oracle_max_nodes, params.oracle_max_ports, len(network.nodes), len(backbone)),
            nodes=len(network.nodes),
            ports=len(backbone),
        )
    if table is None:
        table = compute_fractions(network, ecmp_mode=params.ecmp_mode)
    check_reachable(matrix, table)

    candidates: List[Tuple[float, int, Tuple[str, ...], ActivationPlan]] = []
    for size in range(len(backbone) + 1):
        for active in itertools.combinations(backbone, size):
            plan = _subset_plan(network, active, params)
            value = float(len(plan.active_ports())) if objective == const.OBJECTIVE_PORTS else plan_energy(network, plan)
            candidates.append((value, size, active, plan))
    candidates.sort(key=lambda item: (item[0], item[1], item[2]))

    solver = solver or create_solver(params.solver_backend)
    checked = 0
    for value, _, active, plan in candidates:
        if not _routable(network, matrix, table, plan, params):
            continue
        checked += 1
        model = feasibility_lp(network, matrix, table, plan, params)
        solution = solve(model, params.limits, solver)
        if solution.status != lp_model.OPTIMAL:
            continue
        routing = extract_routing(model, solution, matrix, params.mode)
        loads = arc_traffic(table, matrix, routing)
        report = utilization(network, plan, loads)
        logger.info("[Oracle] optimum {} = {} with {} active backbone ports after {} feasibility checks".format(objective, value, len(active), checked))
        return SrConfiguration(
            routing=routing,
            mode=params.mode,
            plan=plan,
            arc_traffic=loads,
            utilization=report.utilization,
            mlu=report.mlu,
            theta=params.theta,
            method=const.METHOD_ORACLE,
            status=const.STATUS_OPTIMAL,
            lp_objective=value,
            ecmp_mode=table.ecmp_mode,
        )
    raise OptimizationInfeasibleError("no port subset keeps every link under theta {}".format(params.theta), theta=params.theta)
