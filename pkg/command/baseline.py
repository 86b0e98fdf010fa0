import os

from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import load_instance, output_dir, write_reports
from common import const
from evaluation.baseline import spr_baseline
from evaluation.energy import energy_report
from optimizer.params import OptimizationParams
from report.configuration_store import save_configuration
from report.writer import SUMMARY_COLUMNS, summary_row
from routing.fractions import compute_fractions


class BaselineCommand(Command):
    name = const.BASELINE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        instance = load_instance(run_config)
        params = OptimizationParams.from_config(run_config)
        table = compute_fractions(instance.network, ecmp_mode=params.ecmp_mode)
        configuration = spr_baseline(instance.network, instance.matrix, table, params.theta, params.ports_per_linecard)
        energy = energy_report(instance.network, configuration.plan, float(run_config.get("linecard_share")))

        stem = "{}.{}".format(instance.name, configuration.method)
        stored = save_configuration(os.path.join(output_dir(run_config), stem + ".configuration.json"), instance.network, configuration, instance.name)
        row = summary_row(instance.name, instance.network, configuration, energy, float(run_config.get("traffic_scale")))
        extra = {"command": self.name, "instance": instance.name, "notes": instance.notes, "energy": energy.to_dict(), "warnings": configuration.warnings}
        artifacts = [stored] + write_reports(run_config, stem, [row], extra, SUMMARY_COLUMNS)
        return Reply(ReplyType.REPORT, dict(extra, rows=[row], artifacts=artifacts))
