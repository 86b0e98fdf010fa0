"""
Repetita topology (.graph) and demand (.demands) text formats.

    NODES <n>
    label x y
    <label> <x> <y>
    ...

    EDGES <m>
    label src dest weight bw delay
    <label> <src index> <dest index> <weight> <bandwidth> <delay>
    ...

    DEMANDS <k>
    label src dest bw
    <label> <src index> <dest index> <bandwidth>
"""
from typing import Dict, List, Optional, Tuple

from common.errors import NetworkError, RepetitaFormatError
from common.log import logger
from net.network import Network, NetworkBuilder
from traffic.matrix import TrafficMatrix

NODE_COLUMNS = ["label", "x", "y"]
EDGE_COLUMNS = ["label", "src", "dest", "weight", "bw", "delay"]
DEMAND_COLUMNS = ["label", "src", "dest", "bw"]


def _read_lines(path):
    with open(path, "r", encoding="utf-8") as f:
        # (行号, 去掉空白后的内容)，跳过空行
        return [(no, line.strip()) for no, line in enumerate(f, start=1) if line.strip()]


def _section(path, lines, pos, name, columns) -> Tuple[List[Tuple[int, List[str]]], int]:
    if pos >= len(lines):
        raise RepetitaFormatError(path, lines[-1][0] if lines else 0, "missing {} section".format(name))
    no, text = lines[pos]
    head = text.split()
    if len(head) != 2 or head[0].upper() != name:
        raise RepetitaFormatError(path, no, "expected '{} <count>', got '{}'".format(name, text))
    try:
        count = int(head[1])
    except ValueError:
        raise RepetitaFormatError(path, no, "{} count is not an integer: {}".format(name, head[1]))
    pos += 1
    # 列名行可选
    if pos < len(lines) and lines[pos][1].split()[0].lower() == "label":
        pos += 1
    rows = []
    for _ in range(count):
        if pos >= len(lines):
            raise RepetitaFormatError(path, lines[-1][0], "{} section ends after {} of {} rows".format(name, len(rows), count))
        no, text = lines[pos]
        fields = text.split()
        if len(fields) < len(columns):
            raise RepetitaFormatError(path, no, "expected {} fields ({}), got {}".format(len(columns), " ".join(columns), len(fields)))
        rows.append((no, fields))
        pos += 1
    return rows, pos


def _number(path, no, text, what, cast=float):
    try:
        return cast(text)
    except ValueError:
        raise RepetitaFormatError(path, no, "{} is not a number: {}".format(what, text))


def _node(path, no, text, names):
    index = _number(path, no, text, "node index", int)
    if not 0 <= index < len(names):
        raise RepetitaFormatError(path, no, "dangling node reference {}".format(index), node=index)
    return names[index]


def parse_graph(graph_file: str, accept_asymmetric_bandwidth: bool = False) -> Network:
    """
    Each directed EDGES entry is paired with its opposite entry into one link whose ports are
    not created yet (see expand_ports). The link keeps the edge bandwidth and both IGP weights.
    """
    lines = _read_lines(graph_file)
    node_rows, pos = _section(graph_file, lines, 0, "NODES", NODE_COLUMNS)
    edge_rows, pos = _section(graph_file, lines, pos, "EDGES", EDGE_COLUMNS)

    builder = NetworkBuilder()
    names: List[str] = []
    for no, fields in node_rows:
        name = fields[0]
        if name in names:
            name = "{}_{}".format(name, len(names))
        builder.add_router(name, (_number(graph_file, no, fields[1], "x"), _number(graph_file, no, fields[2], "y")))
        names.append(name)

    # 同一对节点上未配对的有向边，按出现顺序与反向边配对
    pending: Dict[Tuple[str, str], List[Tuple[int, float, float]]] = {}
    links = []
    for no, fields in edge_rows:
        src, dst = _node(graph_file, no, fields[1], names), _node(graph_file, no, fields[2], names)
        if src == dst:
            raise RepetitaFormatError(graph_file, no, "self loop at {}".format(src))
        weight = _number(graph_file, no, fields[3], "weight")
        bandwidth = _number(graph_file, no, fields[4], "bandwidth")
        if weight <= 0:
            raise RepetitaFormatError(graph_file, no, "weight must be positive, got {}".format(fields[3]))
        if bandwidth < 0:
            raise RepetitaFormatError(graph_file, no, "bandwidth must be non-negative, got {}".format(fields[4]))
        opposite = pending.get((dst, src))
        if opposite:
            rev_no, rev_weight, rev_bw = opposite.pop(0)
            if rev_bw != bandwidth:
                if not accept_asymmetric_bandwidth:
                    raise RepetitaFormatError(graph_file, no, "asymmetric bandwidth {} vs {} on line {}".format(bandwidth, rev_bw, rev_no), src=src, dst=dst)
                logger.warning("[Repetita] {}:{} asymmetric bandwidth {} / {}, using the max".format(graph_file, no, rev_bw, bandwidth))
            # the earlier entry defines the link direction
            links.append((rev_no, dst, src, rev_weight, weight, max(bandwidth, rev_bw)))
        else:
            pending.setdefault((src, dst), []).append((no, weight, bandwidth))
    for (src, dst), entries in pending.items():
        for no, weight, bandwidth in entries:
            logger.warning("[Repetita] {}:{} edge {}->{} has no reverse entry, reusing weight {}".format(graph_file, no, src, dst, weight))
            links.append((no, src, dst, weight, weight, bandwidth))

    for _, u, v, w_uv, w_vu, bandwidth in sorted(links, key=lambda item: item[0]):
        builder.add_link(u, v, [], weight_uv=w_uv, weight_vu=w_vu, bandwidth=bandwidth)
    network = builder.build()
    logger.info("[Repetita] {}: {} nodes, {} links".format(graph_file, len(network.nodes), len(network.links)))
    return network


def parse_demands(demands_file: str, nodes) -> TrafficMatrix:
    lines = _read_lines(demands_file)
    rows, _ = _section(demands_file, lines, 0, "DEMANDS", DEMAND_COLUMNS)
    names = list(nodes)
    demands: Dict[Tuple[str, str], float] = {}
    for no, fields in rows:
        src, dst = _node(demands_file, no, fields[1], names), _node(demands_file, no, fields[2], names)
        if src == dst:
            raise RepetitaFormatError(demands_file, no, "self demand {}->{} is not allowed".format(src, dst))
        volume = _number(demands_file, no, fields[3], "bandwidth")
        if volume < 0:
            raise RepetitaFormatError(demands_file, no, "demand must be non-negative, got {}".format(fields[3]))
        if (src, dst) in demands:
            logger.warning("[Repetita] {}:{} duplicate demand {}->{}, summing".format(demands_file, no, src, dst))
        demands[(src, dst)] = demands.get((src, dst), 0.0) + volume
    return TrafficMatrix(demands)


def parse_repetita(graph_file: str, demands_file: Optional[str] = None, accept_asymmetric_bandwidth: bool = False) -> Tuple[Network, TrafficMatrix]:
    network = parse_graph(graph_file, accept_asymmetric_bandwidth)
    matrix = parse_demands(demands_file, network.nodes) if demands_file else TrafficMatrix()
    return network, matrix


def _fmt(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def write_repetita(network: Network, matrix: TrafficMatrix, graph_path: str, demands_path: Optional[str] = None):
    index = {name: i for i, name in enumerate(network.nodes)}
    out = ["NODES {}".format(len(network.nodes)), "label x y"]
    for name in network.nodes:
        x, y = network.coordinates.get(name, (0.0, 0.0))
        out.append("{} {} {}".format(name, _fmt(x), _fmt(y)))
    out.append("")
    out.append("EDGES {}".format(network.num_arcs))
    out.append("label src dest weight bw delay")
    for arc in network.arcs:
        link = network.links[arc.link_id]
        bandwidth = link.bandwidth if link.bandwidth else network.total_bandwidth(link.id)
        out.append("edge_{} {} {} {} {} 1".format(arc.index, index[arc.src], index[arc.dst], _fmt(network.weights[arc.index]), _fmt(bandwidth)))
    with open(graph_path, "w", encoding="utf-8") as f:
        f.write("\n".join(out) + "\n")

    if demands_path:
        rows = matrix.items()
        out = ["DEMANDS {}".format(len(rows)), "label src dest bw"]
        for i, ((u, v), t) in enumerate(rows):
            if u not in index or v not in index:
                raise NetworkError("demand {}->{} references a router outside the network".format(u, v))
            out.append("demand_{} {} {} {}".format(i, index[u], index[v], _fmt(t)))
        with open(demands_path, "w", encoding="utf-8") as f:
            f.write("\n".join(out) + "\n")
    logger.info("[Repetita] wrote {} ({} nodes, {} edges)".format(graph_path, len(network.nodes), network.num_arcs))
