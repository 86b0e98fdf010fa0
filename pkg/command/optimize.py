import os

from bridge.bridge import Bridge
from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import load_instance, output_dir, write_reports
from common import const
from evaluation.energy import energy_report
from optimizer.green_sr import optimize
from optimizer.params import OptimizationParams
from report.configuration_store import save_configuration
from report.writer import SUMMARY_COLUMNS, summary_row
from routing.fractions import compute_fractions


class OptimizeCommand(Command):
    name = const.OPTIMIZE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        instance = load_instance(run_config)
        params = OptimizationParams.from_config(run_config)
        table = compute_fractions(instance.network, ecmp_mode=params.ecmp_mode)
        configuration = optimize(instance.network, instance.matrix, params, table, Bridge().get_solver(params.solver_backend))
        energy = energy_report(instance.network, configuration.plan, float(run_config.get("linecard_share")))

        stem = "{}.{}".format(instance.name, configuration.method)
        stored = save_configuration(os.path.join(output_dir(run_config), stem + ".configuration.json"), instance.network, configuration, instance.name)
        row = summary_row(instance.name, instance.network, configuration, energy, float(run_config.get("traffic_scale")))
        extra = {
            "command": self.name,
            "instance": instance.name,
            "notes": instance.notes,
            "energy": energy.to_dict(),
            "lp_objective": configuration.lp_objective,
            "steered_demands": len(configuration.steered_demands()),
            "warnings": configuration.warnings,
        }
        artifacts = [stored] + write_reports(run_config, stem, [row], extra, SUMMARY_COLUMNS)
        content = dict(extra, rows=[row], artifacts=artifacts)
        return Reply(ReplyType.REPORT, content)
