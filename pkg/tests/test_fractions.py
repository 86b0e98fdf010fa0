import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from common import const
from common.errors import RoutingError
from evaluation.mlu import utilization
from ingest.synthetic import steering_example
from net.network import NetworkBuilder
from net.plan import ActivationPlan
from routing.fractions import compute_fractions, two_segment_fraction, two_segment_vector
from routing.load import arc_traffic, shortest_path_routing, validate_routing
from tests.helpers import line_network, square_network
from traffic.matrix import TrafficMatrix, scale_matrix


class TestFlowFractions(unittest.TestCase):
    def test_unique_path(self):
        """直线 U-M-W：唯一最短路上的份额为 1"""
        network = line_network("UMW")
        table = compute_fractions(network)
        self.assertEqual(table.f("U", "W", "U-M:U>M"), 1.0)
        self.assertEqual(table.f("U", "W", "M-W:M>W"), 1.0)
        self.assertEqual(table.f("U", "W", "U-M:M>U"), 0.0)
        self.assertEqual(table.distance("U", "W"), 2.0)
        self.assertEqual(table.f("U", "U", 0), 0.0)

    def test_even_split_on_square(self):
        """两条等长路径平分流量"""
        table = compute_fractions(square_network())
        for arc in ["u-x:u>x", "x-w:x>w", "u-y:u>y", "y-w:y>w"]:
            self.assertEqual(table.f("u", "w", arc), 0.5)

    def test_single_path_picks_smallest_next_hop(self):
        table = compute_fractions(square_network(), ecmp_mode=const.SINGLE_PATH)
        self.assertEqual(table.f("u", "w", "u-x:u>x"), 1.0)
        self.assertEqual(table.f("u", "w", "x-w:x>w"), 1.0)
        self.assertEqual(table.f("u", "w", "u-y:u>y"), 0.0)

    def test_flow_conservation(self):
        network = square_network()
        table = compute_fractions(network)
        for u in network.nodes:
            for w in network.nodes:
                if u == w:
                    continue
                out_u = sum(table.f(u, w, a) for a in network.arcs if a.src == u)
                in_w = sum(table.f(u, w, a) for a in network.arcs if a.dst == w)
                self.assertAlmostEqual(out_u, 1.0)
                self.assertAlmostEqual(in_w, 1.0)

    def test_weights_override(self):
        network = square_network()
        table = compute_fractions(network, weights={"u-x:u>x": 5})
        self.assertEqual(table.f("u", "w", "u-y:u>y"), 1.0)
        with self.assertRaises(RoutingError):
            compute_fractions(network, weights=[1.0])
        with self.assertRaises(RoutingError):
            compute_fractions(network, weights={"u-x:u>x": 0})
        with self.assertRaises(RoutingError):
            compute_fractions(network, ecmp_mode="random")

    def test_unreachable(self):
        builder = NetworkBuilder()
        for name in "ABC":
            builder.add_router(name)
        builder.add_link("A", "B", [1.0])
        table = compute_fractions(builder.build())
        self.assertFalse(table.reachable("A", "C"))
        self.assertIn(("C", "A"), table.unreachable)
        self.assertEqual(table.vector("A", "C"), {})
        self.assertEqual(table.distance("A", "C"), float("inf"))


class TestTwoSegment(unittest.TestCase):
    def test_sum_of_segments(self):
        network = line_network("UMW")
        table = compute_fractions(network)
        # U -> M via W: U>M, M>W, then W>M
        self.assertEqual(two_segment_fraction(table, "U", "M", "W", "U-M:U>M"), 1.0)
        self.assertEqual(two_segment_fraction(table, "U", "M", "W", "M-W:M>W"), 1.0)
        self.assertEqual(two_segment_fraction(table, "U", "M", "W", "M-W:W>M"), 1.0)
        vector = two_segment_vector(table, "U", "M", "M")
        self.assertEqual(vector, {network.arc("U-M:U>M").index: 1.0})

    def test_invalid_paths(self):
        table = compute_fractions(line_network("UMW"))
        with self.assertRaises(RoutingError):
            two_segment_fraction(table, "U", "U", "M", 0)
        with self.assertRaises(RoutingError):
            two_segment_fraction(table, "U", "W", "U", 0)
        with self.assertRaises(RoutingError):
            two_segment_vector(table, "U", "W", "U")


class TestArcTraffic(unittest.TestCase):
    def test_shortest_path_loads(self):
        network = square_network()
        table = compute_fractions(network)
        matrix = TrafficMatrix({("u", "w"): 2.0})
        loads = arc_traffic(table, matrix, shortest_path_routing(matrix))
        self.assertEqual(loads[network.arc("u-x:u>x").index], 1.0)
        self.assertEqual(loads[network.arc("y-w:y>w").index], 1.0)
        self.assertEqual(float(np.sum(loads)), 4.0)

    def test_steered_loads(self):
        network = square_network()
        table = compute_fractions(network, ecmp_mode=const.SINGLE_PATH)
        matrix = TrafficMatrix({("u", "w"): 1.0})
        loads = arc_traffic(table, matrix, {("u", "w"): {"w": 0.5, "y": 0.5}})
        self.assertEqual(loads[network.arc("u-x:u>x").index], 0.5)
        self.assertEqual(loads[network.arc("u-y:u>y").index], 0.5)

    def test_validate_routing(self):
        matrix = TrafficMatrix({("u", "w"): 1.0})
        with self.assertRaises(RoutingError):
            validate_routing(matrix, {})
        with self.assertRaises(RoutingError):
            validate_routing(matrix, {("u", "w"): {"w": 0.5}})
        with self.assertRaises(RoutingError):
            validate_routing(matrix, {("u", "w"): {"u": 1.0}})
        with self.assertRaises(RoutingError):
            validate_routing(matrix, {("u", "w"): {"w": 1.5, "x": -0.5}})
        validate_routing(matrix, {("u", "w"): {"w": 0.25, "x": 0.75}})

    @settings(max_examples=50, deadline=None)
    @given(st.floats(0.01, 100.0), st.floats(0.1, 0.9))
    def test_loads_scale_with_matrix(self, factor, share):
        """需求整体乘以 lambda，弧上流量和利用率都乘以 lambda"""
        network, matrix = steering_example()
        table = compute_fractions(network)
        routing = shortest_path_routing(matrix)
        routing[("A", "F")] = {"F": 1.0 - share, "D": share}
        plan = ActivationPlan.all_active(network)
        base = arc_traffic(table, matrix, routing)
        scaled = arc_traffic(table, scale_matrix(matrix, factor), routing)
        np.testing.assert_allclose(scaled, factor * base, rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(utilization(network, plan, scaled).utilization, factor * utilization(network, plan, base).utilization, rtol=1e-9, atol=1e-12)


if __name__ == "__main__":
    unittest.main()
