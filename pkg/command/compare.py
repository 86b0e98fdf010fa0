"""
Every method on one instance, optionally at several traffic scales: inactive ports, inactive
linecards and MLU side by side.
"""
import dataclasses
from typing import List

import numpy as np

from bridge.bridge import Bridge
from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import load_instance, write_reports
from common import const
from common.errors import ConfigError, InstanceTooLargeError, OptimizationError
from common.log import logger
from evaluation.baseline import spr_baseline
from evaluation.energy import energy_report
from optimizer.green_sr import optimize
from optimizer.oracle import exact_oracle
from optimizer.params import OptimizationParams
from report.writer import SUMMARY_COLUMNS, failed_row, summary_row
from routing.fractions import compute_fractions
from traffic.matrix import scale_matrix
from traffic.profile import detect_low_load, fit_profile
from traffic.series import load_series_csv

COMPARE_COLUMNS = SUMMARY_COLUMNS + ["inactive_port_share", "inactive_linecard_share"]


def window_scales(run_config) -> List[float]:
    """mu(t) / max mu for the slots of the low-load window, distinct values in descending order"""
    series = load_series_csv(run_config.path("series"), int(run_config.get("slot_minutes")))
    profile = fit_profile(series, float(run_config.get("confidence_level")))
    window = detect_low_load(profile, float(run_config.get("low_load_fraction")))
    peak = float(np.max(profile.mean))
    if window.is_empty or peak <= 0:
        raise ConfigError("the traffic series has no low-load window to take scales from")
    return sorted({round(float(profile.mean[s]) / peak, 3) for s in window.slots()}, reverse=True)


class CompareCommand(Command):
    name = const.COMPARE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        instance = load_instance(run_config)
        params = OptimizationParams.from_config(run_config)
        if run_config.path("scales"):
            scales = [float(s) for s in run_config.path("scales")]
        elif run_config.path("series"):
            scales = window_scales(run_config)
        else:
            scales = [1.0]
        if any(not s > 0 for s in scales):
            raise ConfigError("traffic scales must be positive, got {}".format(scales), scales=scales)

        network = instance.network
        table = compute_fractions(network, ecmp_mode=params.ecmp_mode)
        solver = Bridge().get_solver(params.solver_backend)
        share = float(run_config.get("linecard_share"))
        rows = []
        for scale in scales:
            matrix = scale_matrix(instance.matrix, scale)
            runs = [
                (const.METHOD_SPR, const.SPLITTING, lambda: spr_baseline(network, matrix, table, params.theta, params.ports_per_linecard)),
                (const.METHOD_2SRG, const.SPLITTING, lambda: optimize(network, matrix, params, table, solver)),
                (
                    const.METHOD_2SRG_NS,
                    const.NO_SPLITTING,
                    lambda: optimize(network, matrix, dataclasses.replace(params, mode=const.NO_SPLITTING), table, solver),
                ),
                (const.METHOD_ORACLE, params.mode, lambda: exact_oracle(network, matrix, params, const.OBJECTIVE_PORTS, table, solver)),
            ]
            for method, mode, job in runs:
                try:
                    configuration = job()
                except InstanceTooLargeError as e:
                    logger.info("[Bridge] skip {} at scale {}: {}".format(method, scale, e.message))
                    continue
                except OptimizationError as e:
                    logger.warning("[Bridge] {} at scale {} failed: {}".format(method, scale, e.message))
                    rows.append(dict(failed_row(instance.name, method, mode, params.theta, scale, e.code), inactive_port_share=None, inactive_linecard_share=None))
                    continue
                energy = energy_report(network, configuration.plan, share)
                row = summary_row(instance.name, network, configuration, energy, scale * float(run_config.get("traffic_scale")))
                row["inactive_port_share"] = configuration.inactive_port_share()
                row["inactive_linecard_share"] = energy.linecard_fraction_off
                rows.append(row)

        extra = {"command": self.name, "instance": instance.name, "notes": instance.notes, "scales": scales}
        artifacts = write_reports(run_config, "{}.compare".format(instance.name), rows, extra, COMPARE_COLUMNS)
        return Reply(ReplyType.REPORT, dict(extra, rows=rows, artifacts=artifacts))
