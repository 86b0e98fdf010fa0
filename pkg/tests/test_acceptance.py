"""
End-to-end checks on generated instances. Sizes come from the environment so a quick run stays
quick: GREEN_SR_RANDOM_INSTANCES, GREEN_SR_MAX_NODES, GREEN_SR_ORACLE_INSTANCES.
Runs that cannot meet theta are counted as infeasible, which is only accepted when shortest paths already exceed it.
REPETITA_DIR points at a Repetita data directory; without it those checks are skipped.
"""
import glob
import os
import unittest

import numpy as np

from common import const
from common.log import logger
from common.errors import InstanceTooLargeError, OptimizationInfeasibleError
from evaluation.baseline import spr_baseline
from evaluation.energy import energy_report
from ingest.ports import expand_ports
from ingest.repetita import parse_repetita
from ingest.synthetic import random_instance
from net.plan import validate_plan
from optimizer.green_sr import optimize
from optimizer.oracle import exact_oracle
from optimizer.params import OptimizationParams
from routing.fractions import compute_fractions
from traffic.matrix import downsample_matrix, scale_matrix

THETA = 0.7
TOL = 1e-6
RANDOM_INSTANCES = int(os.environ.get("GREEN_SR_RANDOM_INSTANCES", "20"))
MAX_NODES = int(os.environ.get("GREEN_SR_MAX_NODES", "10"))
ORACLE_INSTANCES = int(os.environ.get("GREEN_SR_ORACLE_INSTANCES", "10"))
REPETITA_DIR = os.environ.get("REPETITA_DIR")
REPETITA_MAX_DEMANDS = os.environ.get("GREEN_SR_REPETITA_MAX_DEMANDS")
REPETITA_INSTANCES = ["DeutscheTelekom", "Forthnet", "Globenet", "GtsCzechRepublic", "RedBestel", "Renater2008", "Renater2010", "Ulaknet", "Uninett2010", "Uunet"]


NEAR_THETA = 0.05
NEAR_THETA_SHARE = 0.5
PORTS_PER_LINK = 32


def _random_cases(count, low, high, seed=2024, max_target=0.9):
    rng = np.random.default_rng(seed)
    for i in range(count):
        yield i, int(rng.integers(low, high + 1)), float(rng.uniform(0.3, max_target))


def _run_mode(network, matrix, table, mode, backend=const.HIGHS):
    try:
        return optimize(network, matrix, OptimizationParams(theta=THETA, mode=mode, solver_backend=backend), table)
    except OptimizationInfeasibleError:
        return None


class TestFeasibility(unittest.TestCase):
    def _check(self, network, matrix, table, target, config):
        if config is None:
            self.assertGreater(target, THETA)
            return
        self.assertLessEqual(config.mlu, THETA + TOL)
        self.assertEqual(validate_plan(network, config.plan), [])
        baseline = spr_baseline(network, matrix, table, THETA)
        if baseline.status == const.STATUS_OPTIMAL:
            self.assertGreaterEqual(config.inactive_port_share(), baseline.inactive_port_share() - TOL)

    def test_theta_and_plan_rules(self):
        """最短路 MLU 在 0.3 到 0.9 之间的随机实例：MLU 不超过 theta，过半实例的 MLU 贴近 theta"""
        outcomes = {"ok": 0, "infeasible": 0}
        near = 0
        for seed, nodes, target in _random_cases(RANDOM_INSTANCES, 5, MAX_NODES):
            network, matrix = random_instance(nodes, seed=seed, target_spr_mlu=target, ports_per_link=PORTS_PER_LINK)
            table = compute_fractions(network)
            for mode in const.MODES:
                with self.subTest(seed=seed, nodes=nodes, mode=mode, target=target):
                    config = _run_mode(network, matrix, table, mode)
                    self._check(network, matrix, table, target, config)
                    if config is None:
                        outcomes["infeasible"] += 1
                        continue
                    outcomes["ok"] += 1
                    if abs(config.mlu - THETA) <= NEAR_THETA:
                        near += 1
        logger.info("[Acceptance] {} feasible runs, {} infeasible, {} with MLU within {} of theta".format(outcomes["ok"], outcomes["infeasible"], near, NEAR_THETA))
        self.assertGreater(outcomes["ok"], 0)
        self.assertGreaterEqual(near / outcomes["ok"], NEAR_THETA_SHARE)

    def test_in_repo_backend(self):
        """用自带单纯形求解器重复可行性检查，两种模式都覆盖"""
        for seed, nodes, target in _random_cases(4, 4, 5, seed=5):
            network, matrix = random_instance(nodes, seed=seed, target_spr_mlu=target)
            table = compute_fractions(network)
            for mode in (const.MODES if nodes == 4 else [const.SPLITTING]):
                with self.subTest(seed=seed, nodes=nodes, mode=mode, target=target):
                    simplex = _run_mode(network, matrix, table, mode, const.SIMPLEX)
                    self._check(network, matrix, table, target, simplex)
                    highs = _run_mode(network, matrix, table, mode)
                    self.assertEqual(simplex is None, highs is None)
                    if simplex is not None and mode == const.SPLITTING:
                        self.assertLessEqual(abs(simplex.lp_objective - highs.lp_objective), 1e-4)


class TestOracleEquivalence(unittest.TestCase):
    def _compare_with_oracle(self, cases, backend, max_nodes):
        checked = 0
        for seed, nodes, target in cases:
            network, matrix = random_instance(min(nodes, max_nodes), seed=seed, target_spr_mlu=target, extra_links=1)
            try:
                oracle = exact_oracle(network, matrix, OptimizationParams(theta=THETA), const.OBJECTIVE_PORTS)
            except InstanceTooLargeError:
                continue
            checked += 1
            with self.subTest(seed=seed, nodes=nodes, backend=backend):
                relaxed = optimize(network, matrix, OptimizationParams(theta=THETA, solver_backend=backend))
                self.assertGreaterEqual(relaxed.ports_active(), oracle.ports_active())
                self.assertLessEqual(relaxed.ports_active(), oracle.ports_active() + len(network.links))
                integral = optimize(network, matrix, OptimizationParams(theta=THETA, port_integrality=True, solver_backend=backend))
                self.assertEqual(integral.ports_active(), oracle.ports_active())
        self.assertGreater(checked, 0)

    def test_heuristic_close_to_optimum(self):
        self._compare_with_oracle(_random_cases(ORACLE_INSTANCES, 3, 5, seed=11, max_target=THETA), const.HIGHS, 5)

    def test_heuristic_close_to_optimum_simplex(self):
        """单纯形后端的整数端口结果同样等于穷举最优"""
        self._compare_with_oracle(_random_cases(max(2, ORACLE_INSTANCES // 3), 3, 4, seed=11, max_target=THETA), const.SIMPLEX, 4)


def _repetita_files(name):
    graphs = sorted(glob.glob(os.path.join(REPETITA_DIR, "**", name + ".graph"), recursive=True))
    demands = sorted(glob.glob(os.path.join(REPETITA_DIR, "**", name + ".*demands"), recursive=True))
    if not graphs or not demands:
        return None
    return graphs[0], demands[0]


@unittest.skipUnless(REPETITA_DIR, "REPETITA_DIR not set")
class TestRepetita(unittest.TestCase):
    def test_topology_size(self):
        files = _repetita_files("GtsCzechRepublic")
        if files is None:
            self.skipTest("GtsCzechRepublic not found")
        network, _ = parse_repetita(files[0])
        self.assertEqual(len(network.nodes), 32)
        self.assertEqual(len(network.arcs), 66)

    def test_port_savings(self):
        shares = {}
        for name in REPETITA_INSTANCES:
            files = _repetita_files(name)
            if files is None:
                continue
            network, matrix = parse_repetita(*files, accept_asymmetric_bandwidth=True)
            network = expand_ports(network, 4, None, 8)
            matrix = scale_matrix(matrix, 0.5)
            if REPETITA_MAX_DEMANDS:
                matrix, _ = downsample_matrix(matrix, int(REPETITA_MAX_DEMANDS))
            table = compute_fractions(network)
            splitting = optimize(network, matrix, OptimizationParams(theta=THETA), table)
            no_splitting = optimize(network, matrix, OptimizationParams(theta=THETA, mode=const.NO_SPLITTING), table)
            self.assertLessEqual(splitting.mlu, THETA + TOL)
            self.assertLessEqual(abs(splitting.inactive_port_share() - no_splitting.inactive_port_share()), 0.05)
            self.assertGreaterEqual(energy_report(network, splitting.plan).energy_saving, 0.0)
            shares[name] = splitting.inactive_port_share()
        if len(shares) < len(REPETITA_INSTANCES):
            self.skipTest("only {} of {} instances found".format(len(shares), len(REPETITA_INSTANCES)))
        self.assertGreaterEqual(sum(1 for s in shares.values() if s >= 0.5), 7)
        self.assertGreaterEqual(max(shares[n] for n in ["Forthnet", "Ulaknet", "Uninett2010"]), 0.65)


if __name__ == "__main__":
    unittest.main()
