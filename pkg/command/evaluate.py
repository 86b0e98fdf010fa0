from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import load_instance, write_reports
from common import const
from common.errors import ConfigError
from common.utils import leq_tol
from evaluation.energy import energy_report
from evaluation.mlu import evaluate_mlu
from net.plan import validate_plan
from report.configuration_store import load_configuration
from report.writer import SUMMARY_COLUMNS, summary_row
from routing.fractions import compute_fractions


class EvaluateCommand(Command):
    """
    MLU and energy of a stored configuration. With a demands file the arc loads are recomputed
    from the stored routing, otherwise the stored loads are used.
    """

    name = const.EVALUATE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        path = run_config.path("configuration")
        if path is None:
            raise ConfigError("evaluate needs a --configuration file")
        instance = load_instance(run_config)
        configuration = load_configuration(path, instance.network)
        if len(instance.matrix):
            table = compute_fractions(instance.network, ecmp_mode=configuration.ecmp_mode)
            report = evaluate_mlu(instance.network, configuration, instance.matrix, table)
        else:
            report = evaluate_mlu(instance.network, configuration)
        stored_mlu = configuration.mlu
        configuration.arc_traffic, configuration.utilization, configuration.mlu = report.arc_traffic, report.utilization, report.mlu
        energy = energy_report(instance.network, configuration.plan, float(run_config.get("linecard_share")))

        row = summary_row(instance.name, instance.network, configuration, energy, float(run_config.get("traffic_scale")))
        extra = {
            "command": self.name,
            "instance": instance.name,
            "configuration": path,
            "stored_mlu": stored_mlu,
            "theta_respected": bool(leq_tol(report.mlu, configuration.theta, const.FEASIBILITY_TOL)),
            "worst_arcs": [{"arc": arc, "utilization": lu} for arc, lu in report.worst_arcs(instance.network)],
            "violations": [{"rule": v.rule, "subject": v.subject, "message": v.message} for v in validate_plan(instance.network, configuration.plan)],
            "energy": energy.to_dict(),
        }
        artifacts = write_reports(run_config, "{}.{}.evaluate".format(instance.name, configuration.method), [row], extra, SUMMARY_COLUMNS)
        return Reply(ReplyType.REPORT, dict(extra, rows=[row], artifacts=artifacts))
