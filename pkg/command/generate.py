import os

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import output_dir
from common import const
from common.errors import ConfigError
from ingest.repetita import write_repetita
from ingest.synthetic import SYNTHETIC_LABEL, generate_isp_like, generate_traffic_series
from traffic.series import save_series_csv


class GenerateCommand(Command):
    """synthetic ISP-like instance (.graph/.demands) plus a diurnal traffic series CSV"""

    name = const.GENERATE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        nodes = int(run_config.path("nodes", 12))
        days = int(run_config.path("days", 7))
        if nodes < 2 or days < 1:
            raise ConfigError("generate needs at least 2 nodes and 1 day, got {} and {}".format(nodes, days))
        seed = int(run_config.get("seed"))
        name = run_config.path("name", "isp-like-{}-{}".format(nodes, seed))
        directory = output_dir(run_config)

        network, matrix = generate_isp_like(nodes, seed, int(run_config.get("ports_per_link")), int(run_config.get("ports_per_linecard")))
        graph_path = os.path.join(directory, name + ".graph")
        demands_path = os.path.join(directory, name + ".demands")
        write_repetita(network, matrix, graph_path, demands_path)
        series = generate_traffic_series(days, seed, int(run_config.get("slot_minutes")))
        series_path = os.path.join(directory, name + ".series.csv")
        save_series_csv(series, series_path)

        content = {
            "command": self.name,
            "label": SYNTHETIC_LABEL,
            "instance": name,
            "nodes": len(network.nodes),
            "links": len(network.links),
            "demands": len(matrix),
            "days": days,
            "artifacts": [graph_path, demands_path, series_path],
        }
        return Reply(ReplyType.INFO, content)
