import unittest

from common import const
from common.errors import NetworkError, UnknownArcError
from ingest.ports import expand_ports
from net.network import NetworkBuilder, arc_capacity
from net.plan import ActivationPlan, restrict_to_plan
from tests.helpers import two_router_network


class TestNetworkBuilder(unittest.TestCase):
    def test_link_owns_two_opposite_arcs(self):
        """每条链路生成两条方向相反、共享端口的弧"""
        network = two_router_network([25.0] * 4)
        self.assertEqual(network.num_arcs, 2)
        fwd, rev = network.arcs
        self.assertEqual((fwd.src, fwd.dst), ("A", "B"))
        self.assertEqual((rev.src, rev.dst), ("B", "A"))
        self.assertEqual(network.reverse(fwd.id), rev)
        self.assertEqual(arc_capacity(network, fwd), 100.0)
        self.assertEqual(arc_capacity(network, rev), 100.0)

    def test_linecards_by_ceiling(self):
        """12 个端口端点、每线卡 8 个 -> 2 块线卡"""
        network = two_router_network([1.0] * 12, ports_per_linecard=8)
        self.assertEqual(len(network.linecards["A"]), 2)
        self.assertEqual(len(network.linecards["B"]), 2)
        used = [network.port_linecards[(pid, "A")] for pid in sorted(network.ports)]
        self.assertEqual(used.count("A.lc0"), 8)
        self.assertEqual(used.count("A.lc1"), 4)

    def test_invalid_links(self):
        builder = NetworkBuilder().add_router("A").add_router("B")
        with self.assertRaises(NetworkError):
            builder.add_link("A", "A", [1.0])
        with self.assertRaises(NetworkError):
            builder.add_link("A", "C", [1.0])
        with self.assertRaises(NetworkError):
            builder.add_link("A", "B", [0.0])
        with self.assertRaises(NetworkError):
            builder.add_link("A", "B", [1.0], weight_uv=0)
        with self.assertRaises(NetworkError):
            builder.add_router("A")

    def test_arc_lookup(self):
        network = two_router_network([1.0])
        arc = network.arcs[1]
        self.assertIs(network.arc(arc.id), arc)
        self.assertIs(network.arc(1), arc)
        with self.assertRaises(UnknownArcError):
            network.arc("nope")
        with self.assertRaises(UnknownArcError):
            network.arc(7)

    def test_access_ports_not_deactivatable(self):
        network = two_router_network([1.0, 1.0], roles=[const.BACKBONE, const.ACCESS])
        self.assertEqual([p.id for p in network.backbone_ports()], ["A-B.p0"])

    def test_restrict_to_plan_keeps_topology(self):
        network = two_router_network([25.0] * 4)
        plan = ActivationPlan({"A-B.p0": True, "A-B.p1": False, "A-B.p2": False, "A-B.p3": True})
        restricted = restrict_to_plan(network, plan)
        self.assertEqual(restricted.nodes, network.nodes)
        self.assertEqual(restricted.weights, network.weights)
        self.assertEqual(sorted(restricted.ports), ["A-B.p0", "A-B.p3"])
        self.assertEqual(arc_capacity(restricted, 0), 50.0)


class TestExpandPorts(unittest.TestCase):
    def _bare(self, bandwidth):
        builder = NetworkBuilder().add_router("A").add_router("B")
        builder.add_link("A", "B", [], weight_uv=3, weight_vu=5, bandwidth=bandwidth, link_id="e0")
        return builder.build()

    def test_even_division(self):
        """带宽 400、4 个端口 -> 4 x 100"""
        network = expand_ports(self._bare(400.0), 4)
        self.assertEqual([p.capacity for p in network.link_ports("e0")], [100.0] * 4)
        self.assertEqual(network.weights, (3.0, 5.0))
        self.assertEqual(network.links["e0"].bandwidth, 400.0)

    def test_single_port_and_override(self):
        self.assertEqual(len(expand_ports(self._bare(400.0), 1).ports), 1)
        network = expand_ports(self._bare(400.0), 2, port_capacity=10.0)
        self.assertEqual([p.capacity for p in network.link_ports("e0")], [10.0, 10.0])

    def test_zero_bandwidth_rejected(self):
        with self.assertRaises(NetworkError):
            expand_ports(self._bare(0.0), 4)


if __name__ == "__main__":
    unittest.main()
