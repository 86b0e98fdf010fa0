"""
report writer abstract class
"""
from typing import List, Optional, Sequence

from net.network import Network

# 与 JSON 报告行一致的列顺序，CSV 导出沿用
SUMMARY_COLUMNS = [
    "instance",
    "method",
    "mode",
    "theta",
    "scale",
    "status",
    "ports_total",
    "ports_inactive",
    "linecards_total",
    "linecards_inactive",
    "mlu",
    "energy_saving",
]


class ReportWriter(object):
    extension = ""

    def write(self, rows: List[dict], path: str, extra: Optional[dict] = None, columns: Optional[Sequence[str]] = None) -> str:
        """
        write one report
        :param rows: flat records, one per table row
        :param extra: document-level fields; writers without a document level ignore them
        :param columns: column order, defaults to the row keys in first-seen order
        :return: the written path
        """
        raise NotImplementedError


def summary_row(instance: str, network: Network, configuration, energy, scale: float = 1.0) -> dict:
    return {
        "instance": instance,
        "method": configuration.method,
        "mode": configuration.mode,
        "theta": float(configuration.theta),
        "scale": float(scale),
        "status": configuration.status,
        "ports_total": len(network.ports),
        "ports_inactive": configuration.ports_inactive(),
        "linecards_total": energy.linecards_total,
        "linecards_inactive": energy.linecards_inactive,
        "mlu": float(configuration.mlu),
        "energy_saving": float(energy.energy_saving),
    }


def failed_row(instance: str, method: str, mode: str, theta: float, scale: float, status: str) -> dict:
    row = {key: None for key in SUMMARY_COLUMNS}
    row.update({"instance": instance, "method": method, "mode": mode, "theta": float(theta), "scale": float(scale), "status": status})
    return row


def column_order(rows: List[dict], columns: Optional[Sequence[str]] = None) -> List[str]:
    if columns:
        return list(columns)
    order = []
    for row in rows:
        for key in row:
            if key not in order:
                order.append(key)
    return order
