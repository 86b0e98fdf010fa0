from bridge.context import Context
from bridge.reply import Reply, ReplyType
from command.command import Command
from command.instance import write_reports
from common import const
from common.errors import ConfigError
from common.log import logger
from common.utils import slot_to_time
from traffic.profile import detect_low_load, fit_profile, low_load_table, spike_headroom
from traffic.series import load_series_csv

# 报告中附带的低负载阈值表
LOW_LOAD_FRACTIONS = [0.3, 0.4, 0.5, 0.6, 0.7]
PROFILE_COLUMNS = ["slot", "time", "mean", "std", "lower", "upper", "low_load"]


class AnalyzeCommand(Command):
    name = const.ANALYZE

    def run(self, context: Context) -> Reply:
        run_config = context.content
        path = run_config.path("series")
        if path is None:
            raise ConfigError("analyze needs a --series CSV file")
        series = load_series_csv(path, int(run_config.get("slot_minutes")))
        profile = fit_profile(series, float(run_config.get("confidence_level")))
        fraction = float(run_config.get("low_load_fraction"))
        window = detect_low_load(profile, fraction)
        if window.is_empty:
            logger.warning("[Traffic] no slot stays under {} of the peak mean".format(fraction))
        else:
            logger.info("[Traffic] low-load window {} - {} ({} slots)".format(window.start_time, window.end_time, window.length))

        in_window = set(window.slots())
        rows = [
            {
                "slot": slot,
                "time": slot_to_time(slot, profile.slot_minutes),
                "mean": float(profile.mean[slot]),
                "std": float(profile.std[slot]),
                "lower": float(profile.lower[slot]),
                "upper": float(profile.upper[slot]),
                "low_load": slot in in_window,
            }
            for slot in range(profile.slots_per_day)
        ]
        theta = float(run_config.get("theta"))
        extra = {
            "command": self.name,
            "series": run_config.path("name", path),
            "days": series.num_days,
            "confidence_level": profile.confidence_level,
            "z": profile.z,
            "low_load_fraction": fraction,
            "window": window.to_dict(),
            "windows": [dict(w.to_dict(), fraction=f) for f, w in low_load_table(profile, LOW_LOAD_FRACTIONS)],
            "theta": theta,
            "spike_headroom": spike_headroom(theta),
        }
        stem = "{}.analyze".format(run_config.path("name", "traffic"))
        artifacts = write_reports(run_config, stem, rows, extra, PROFILE_COLUMNS)
        return Reply(ReplyType.REPORT, dict(extra, rows=rows, artifacts=artifacts))
