import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

import app
from bridge.bridge import Bridge
from bridge.context import CommandType, Context
from bridge.reply import ReplyType
from common import const
from config import RunConfig


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        Bridge.reset()

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def run_main(self, *argv):
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = app.main(list(argv))
        return code, json.loads(out.getvalue())

    def test_optimize_steering(self):
        """内置示例端到端优化"""
        code, content = self.run_main("optimize", "--example", "steering", "--output-dir", self.tmp, "--set", "port_integrality=true", "--format", "both")
        self.assertEqual(code, 0)
        row = content["rows"][0]
        self.assertEqual(row["method"], const.METHOD_2SRG)
        self.assertEqual(row["ports_total"] - row["ports_inactive"], 5)
        self.assertLessEqual(row["mlu"], 0.7 + 1e-6)
        self.assertGreaterEqual(content["steered_demands"], 2)
        self.assertEqual(len(content["artifacts"]), 3)
        for path in content["artifacts"]:
            self.assertTrue(os.path.exists(path))
        self.assertTrue(any(p.endswith(".csv") for p in content["artifacts"]))

    def test_reruns_write_identical_files(self):
        """同样的输入重复运行两次，配置文件和报告逐字节相同"""
        contents = []
        for name in ["first", "second"]:
            directory = os.path.join(self.tmp, name)
            code, content = self.run_main("optimize", "--example", "steering", "--output-dir", directory, "--format", "both")
            self.assertEqual(code, 0)
            files = {}
            for path in content["artifacts"]:
                with open(path, "rb") as f:
                    files[os.path.basename(path)] = f.read()
            contents.append(files)
        self.assertEqual(len(contents[0]), 3)
        self.assertEqual(contents[0], contents[1])

    def test_evaluate_round_trip(self):
        code, optimized = self.run_main("optimize", "--example", "steering", "--output-dir", self.tmp, "--set", "port_integrality=true")
        self.assertEqual(code, 0)
        stored = optimized["artifacts"][0]
        self.assertTrue(stored.endswith(".configuration.json"))

        code, evaluated = self.run_main("evaluate", "--example", "steering", "--configuration", stored, "--output-dir", self.tmp)
        self.assertEqual(code, 0)
        self.assertAlmostEqual(evaluated["rows"][0]["mlu"], optimized["rows"][0]["mlu"], places=9)
        self.assertAlmostEqual(evaluated["stored_mlu"], optimized["rows"][0]["mlu"], places=9)
        self.assertTrue(evaluated["theta_respected"])
        self.assertEqual(evaluated["violations"], [])
        self.assertEqual(evaluated["rows"][0]["ports_inactive"], optimized["rows"][0]["ports_inactive"])

    def test_baseline_steering(self):
        code, content = self.run_main("baseline", "--example", "steering", "--output-dir", self.tmp)
        self.assertEqual(code, 0)
        row = content["rows"][0]
        self.assertEqual(row["method"], const.METHOD_SPR)
        self.assertEqual(row["ports_total"] - row["ports_inactive"], 8)

    def test_missing_graph(self):
        code, content = self.run_main("optimize", "--output-dir", self.tmp)
        self.assertEqual(code, 1)
        self.assertEqual(content["error"], "config")

    def test_bad_options(self):
        code, content = self.run_main("optimize", "--example", "steering", "--set", "nope=1")
        self.assertEqual(code, 2)
        self.assertEqual(content["error"], "config")
        code, content = self.run_main("optimize", "--example", "steering", "--theta", "1.5")
        self.assertEqual(code, 2)
        self.assertIn("problems", content["details"])

    def test_generate_then_analyze(self):
        """生成合成实例后分析其流量曲线"""
        code, generated = self.run_main("generate", "--nodes", "8", "--days", "3", "--name", "synthetic", "--output-dir", self.tmp, "--seed", "5")
        self.assertEqual(code, 0)
        self.assertEqual(generated["nodes"], 8)
        graph, demands, series = generated["artifacts"]
        for path in generated["artifacts"]:
            self.assertTrue(os.path.exists(path))

        code, analyzed = self.run_main("analyze", "--series", series, "--name", "synthetic", "--output-dir", self.tmp)
        self.assertEqual(code, 0)
        self.assertEqual(analyzed["days"], 3)
        self.assertEqual(len(analyzed["rows"]), 96)
        self.assertEqual(len(analyzed["windows"]), 5)
        self.assertAlmostEqual(analyzed["spike_headroom"], 1 / 0.7 - 1)

        code, content = self.run_main("baseline", "--graph", graph, "--demands", demands, "--output-dir", self.tmp, "--set", "traffic_scale=0.01")
        self.assertEqual(code, 0)
        self.assertEqual(content["rows"][0]["ports_total"], generated["links"] * 4)

    def test_compare_steering(self):
        code, content = self.run_main("compare", "--example", "steering", "--scales", "1.0", "0.5", "--output-dir", self.tmp)
        self.assertEqual(code, 0)
        self.assertEqual(content["scales"], [1.0, 0.5])
        methods = {row["method"] for row in content["rows"]}
        self.assertTrue({const.METHOD_SPR, const.METHOD_2SRG, const.METHOD_2SRG_NS} <= methods)
        for row in content["rows"]:
            if row["mlu"] is not None:
                self.assertLessEqual(row["mlu"], 0.7 + 1e-6)


class TestBridge(unittest.TestCase):
    def setUp(self):
        Bridge.reset()

    def test_error_reply(self):
        reply = Bridge().fetch_reply(Context(CommandType.EVALUATE, RunConfig(None, example="steering")))
        self.assertEqual(reply.type, ReplyType.ERROR)
        self.assertFalse(reply.ok)
        self.assertEqual(reply.content["error"], "config")

    def test_cached_solver(self):
        self.assertIs(Bridge().get_solver(const.HIGHS), Bridge().get_solver(const.HIGHS))
        self.assertIs(Bridge(), Bridge())

    def test_command_names(self):
        for name in const.COMMANDS:
            self.assertEqual(Bridge().get_command(CommandType.from_name(name)).name, name)


if __name__ == "__main__":
    unittest.main()
