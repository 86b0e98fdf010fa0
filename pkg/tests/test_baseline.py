import unittest

from common import const
from common.errors import InconsistentPlanError
from evaluation.baseline import spr_baseline
from evaluation.mlu import evaluate_mlu, utilization
from ingest.synthetic import steering_example
from net.plan import ActivationPlan
from routing.fractions import compute_fractions
from tests.helpers import single_demand, two_router_network
from traffic.matrix import TrafficMatrix


class TestSprBaseline(unittest.TestCase):
    def test_four_by_twentyfive(self):
        """c = 100 (4 x 25)，tr = 30，theta = 0.7 -> 2 个端口开启，2 个关闭"""
        network = two_router_network([25.0] * 4)
        table = compute_fractions(network)
        config = spr_baseline(network, single_demand("A", "B", 30.0), table, 0.7)
        self.assertEqual(config.ports_active(), 2)
        self.assertEqual(config.ports_inactive(), 2)
        self.assertAlmostEqual(config.mlu, 0.6)
        self.assertEqual(config.status, const.STATUS_OPTIMAL)
        self.assertEqual(config.method, const.METHOD_SPR)

    def test_idle_link_switched_off(self):
        network = two_router_network([25.0] * 4)
        config = spr_baseline(network, TrafficMatrix(), compute_fractions(network), 0.7)
        self.assertEqual(config.ports_active(), 0)

    def test_smallest_ports_first(self):
        network = two_router_network([10.0, 40.0, 20.0])
        config = spr_baseline(network, single_demand("A", "B", 30.0), compute_fractions(network), 0.7)
        self.assertEqual(config.plan.inactive_ports(), ["A-B.p0"])

    def test_violating_link_flagged(self):
        network = two_router_network([25.0] * 4)
        config = spr_baseline(network, single_demand("A", "B", 90.0), compute_fractions(network), 0.7)
        self.assertEqual(config.ports_active(), 4)
        self.assertEqual(config.status, const.STATUS_INFEASIBLE_BASELINE)
        self.assertEqual(len(config.warnings), 1)
        self.assertAlmostEqual(config.mlu, 0.9)

    def test_steering_example_keeps_every_port(self):
        network, matrix = steering_example()
        config = spr_baseline(network, matrix, compute_fractions(network), 0.7)
        self.assertEqual(config.ports_active(), 8)
        self.assertAlmostEqual(evaluate_mlu(network, config).mlu, 0.7)


class TestUtilization(unittest.TestCase):
    def test_traffic_on_dead_link(self):
        network = two_router_network([1.0])
        with self.assertRaises(InconsistentPlanError):
            utilization(network, ActivationPlan({"A-B.p0": False}), [0.5, 0.0])

    def test_worst_arcs(self):
        network = two_router_network([1.0])
        report = utilization(network, ActivationPlan.all_active(network), [0.2, 0.5])
        self.assertEqual(report.mlu, 0.5)
        self.assertEqual(report.worst_arcs(network, 1), [("A-B:B>A", 0.5)])


if __name__ == "__main__":
    unittest.main()
