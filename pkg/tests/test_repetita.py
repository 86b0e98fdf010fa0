import os
import shutil
import tempfile
import unittest

from common.errors import RepetitaFormatError
from ingest.ports import expand_ports
from ingest.repetita import parse_demands, parse_graph, parse_repetita, write_repetita
from ingest.synthetic import generate_isp_like

GRAPH = """NODES 3
label x y
a 0 0
b 1 0
c 0 1

EDGES 6
label src dest weight bw delay
e0 0 1 1 400 1
e1 1 0 1 400 1
e2 1 2 2 400 1
e3 2 1 3 400 1
e4 0 2 1 100 1
e5 2 0 1 100 1
"""

ONE_WAY_GRAPH = """NODES 3
label x y
a 0 0
b 1 0
c 0 1
EDGES 3
label src dest weight bw delay
e0 0 1 1 400 1
e1 1 2 1 400 1
e2 2 0 1 400 1
"""

DEMANDS = """DEMANDS 3
label src dest bw
d0 0 2 10
d1 2 0 5
d2 0 2 1
"""


class TestRepetita(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def _write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_paired_edges(self):
        network, matrix = parse_repetita(self._write("g.graph", GRAPH), self._write("g.demands", DEMANDS))
        self.assertEqual(network.nodes, ("a", "b", "c"))
        self.assertEqual(len(network.links), 3)
        self.assertEqual(network.num_arcs, 6)
        self.assertEqual(network.weights, (1.0, 1.0, 2.0, 3.0, 1.0, 1.0))
        self.assertEqual(network.coordinates["c"], (0.0, 1.0))
        # 重复的需求相加
        self.assertEqual(matrix[("a", "c")], 11.0)
        self.assertEqual(matrix[("c", "a")], 5.0)

    def test_three_directed_edges_give_six_arcs(self):
        network = parse_graph(self._write("one.graph", ONE_WAY_GRAPH))
        self.assertEqual(len(network.links), 3)
        self.assertEqual(network.num_arcs, 6)

    def test_expansion_after_parsing(self):
        network = expand_ports(parse_graph(self._write("g.graph", GRAPH)), 4)
        self.assertEqual(len(network.ports), 12)
        self.assertEqual(sorted(p.capacity for p in network.ports.values())[:4], [25.0] * 4)
        self.assertEqual(network.total_bandwidth("L0"), 400.0)
        # a: 8 endpoints, b: 8 -> one linecard each
        self.assertEqual(len(network.linecards["a"]), 1)

    def test_self_demand_rejected(self):
        graph = parse_graph(self._write("g.graph", GRAPH))
        path = self._write("bad.demands", "DEMANDS 1\nlabel src dest bw\nd0 1 1 5\n")
        with self.assertRaises(RepetitaFormatError) as ctx:
            parse_demands(path, graph.nodes)
        self.assertEqual(ctx.exception.line_no, 3)

    def test_dangling_reference(self):
        graph = parse_graph(self._write("g.graph", GRAPH))
        path = self._write("bad.demands", "DEMANDS 1\nd0 0 7 5\n")
        with self.assertRaises(RepetitaFormatError) as ctx:
            parse_demands(path, graph.nodes)
        self.assertEqual(ctx.exception.line_no, 2)
        self.assertEqual(ctx.exception.to_dict()["error"], "repetita-format")

    def test_malformed(self):
        for text in ["NODE 3\n", "NODES x\n", "NODES 2\na 0 0\n", "NODES 1\na 0 0\nEDGES 1\ne0 0 0 1 1 1\n", "NODES 2\na 0 0\nb 0 0\nEDGES 1\ne0 0 1\n"]:
            with self.assertRaises(RepetitaFormatError):
                parse_graph(self._write("bad.graph", text))

    def test_asymmetric_bandwidth(self):
        text = GRAPH.replace("e1 1 0 1 400 1", "e1 1 0 1 300 1")
        path = self._write("asym.graph", text)
        with self.assertRaises(RepetitaFormatError):
            parse_graph(path)
        network = parse_graph(path, accept_asymmetric_bandwidth=True)
        self.assertEqual(network.links["L0"].bandwidth, 400.0)

    def test_round_trip(self):
        network, matrix = parse_repetita(self._write("g.graph", GRAPH), self._write("g.demands", DEMANDS))
        graph_out, demands_out = os.path.join(self.tmp, "out.graph"), os.path.join(self.tmp, "out.demands")
        write_repetita(network, matrix, graph_out, demands_out)
        again, matrix_again = parse_repetita(graph_out, demands_out)
        self.assertEqual(again.nodes, network.nodes)
        self.assertEqual(len(again.links), len(network.links))
        self.assertEqual(again.weights, network.weights)
        self.assertEqual(matrix_again, matrix)

    def test_synthetic_round_trip(self):
        network, matrix = generate_isp_like(10, seed=3)
        graph_out, demands_out = os.path.join(self.tmp, "isp.graph"), os.path.join(self.tmp, "isp.demands")
        write_repetita(network, matrix, graph_out, demands_out)
        again, matrix_again = parse_repetita(graph_out, demands_out)
        self.assertEqual(len(again.nodes), 10)
        self.assertEqual(len(again.links), len(network.links))
        self.assertEqual(again.weights, network.weights)
        self.assertEqual(len(matrix_again), len(matrix))


if __name__ == "__main__":
    unittest.main()
