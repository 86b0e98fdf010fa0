"""
Instance loading and report output shared by the subcommands.
"""
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from common.errors import ConfigError
from common.log import logger
from common.utils import ensure_dir
from config import RunConfig
from ingest.ports import expand_ports
from ingest.repetita import parse_repetita
from ingest.synthetic import steering_example
from net.network import Network
from report.writer_factory import create_writers
from traffic.matrix import TrafficMatrix, downsample_matrix, scale_matrix

EXAMPLES = {"steering": steering_example}


@dataclass
class Instance:
    name: str
    network: Network
    matrix: TrafficMatrix
    notes: Dict[str, object] = field(default_factory=dict)


def load_instance(run_config: RunConfig) -> Instance:
    """
    --example 使用内置示例 (端口已定义)；否则解析 Repetita 文件并按配置拆分端口、缩放需求
    """
    example = run_config.path("example")
    if example is not None:
        if example not in EXAMPLES:
            raise ConfigError("unknown example {}, choose from {}".format(example, ", ".join(sorted(EXAMPLES))), example=example)
        network, matrix = EXAMPLES[example]()
        name = run_config.path("name", example)
    else:
        graph = run_config.path("graph")
        if graph is None:
            raise ConfigError("a --graph file or an --example is required")
        if not os.path.exists(graph):
            raise ConfigError("graph file {} does not exist".format(graph), path=graph)
        demands = run_config.path("demands")
        if demands is not None and not os.path.exists(demands):
            raise ConfigError("demands file {} does not exist".format(demands), path=demands)
        network, matrix = parse_repetita(graph, demands, run_config.get("accept_asymmetric_bandwidth"))
        network = expand_ports(
            network,
            int(run_config.get("ports_per_link")),
            run_config.get("port_capacity"),
            int(run_config.get("ports_per_linecard")),
            float(run_config.get("linecard_energy")),
            float(run_config.get("port_energy")),
        )
        name = run_config.path("name", os.path.splitext(os.path.basename(graph))[0])

    notes: Dict[str, object] = {}
    scale = float(run_config.get("traffic_scale"))
    if scale != 1.0:
        matrix = scale_matrix(matrix, scale)
        notes["traffic_scale"] = scale
    if run_config.get("max_demands"):
        matrix, dropped = downsample_matrix(matrix, int(run_config.get("max_demands")))
        if dropped > 0:
            notes["downsampled_demands"] = len(matrix)
            notes["dropped_volume_share"] = dropped
    logger.info("[Bridge] instance {}: {} routers, {} links, {} ports, {} demands".format(name, len(network.nodes), len(network.links), len(network.ports), len(matrix)))
    return Instance(name, network, matrix, notes)


def output_dir(run_config: RunConfig) -> str:
    return ensure_dir(run_config.path("output_dir", run_config.get("output_dir")))


def write_reports(run_config: RunConfig, stem: str, rows: List[dict], extra: Optional[dict] = None, columns: Optional[Sequence[str]] = None) -> List[str]:
    directory = output_dir(run_config)
    paths = []
    for writer in create_writers(run_config.get("output_format")):
        paths.append(writer.write(rows, os.path.join(directory, stem + writer.extension), extra, columns))
    return paths
