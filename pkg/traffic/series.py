from typing import Sequence

import numpy as np
import pandas as pd

from common.errors import TrafficError
from common.log import logger

SERIES_COLUMNS = ["day", "slot", "total_traffic"]


class TrafficTimeSeries(object):
    """
    Total network traffic sampled on a uniform time-of-day grid over several days.
    Operator measurements come in quarter-hour slots (96 per day).
    """

    def __init__(self, days: Sequence[int], slots: Sequence[int], values: Sequence[float], slot_minutes: int = 15):
        if not (len(days) == len(slots) == len(values)):
            raise TrafficError("days, slots and values must have equal length")
        if slot_minutes <= 0 or (24 * 60) % slot_minutes != 0:
            raise TrafficError("slot_minutes must divide a day, got {}".format(slot_minutes))
        self.frame = pd.DataFrame({"day": np.asarray(days, dtype=int), "slot": np.asarray(slots, dtype=int), "total_traffic": np.asarray(values, dtype=float)})
        self.slot_minutes = int(slot_minutes)
        if self.frame.duplicated(["day", "slot"]).any():
            dup = self.frame[self.frame.duplicated(["day", "slot"])].iloc[0]
            raise TrafficError("duplicate sample for day {} slot {}".format(int(dup["day"]), int(dup["slot"])))
        bad = self.frame[(self.frame["slot"] < 0) | (self.frame["slot"] >= self.slots_per_day)]
        if len(bad):
            raise TrafficError("slot {} outside the {}-slot day grid".format(int(bad.iloc[0]["slot"]), self.slots_per_day))

    @property
    def slots_per_day(self) -> int:
        return 24 * 60 // self.slot_minutes

    @property
    def num_days(self) -> int:
        return int(self.frame["day"].nunique())

    def grid(self) -> np.ndarray:
        """days x slots matrix; NaN where a sample is missing (days sorted ascending)"""
        table = self.frame.pivot(index="day", columns="slot", values="total_traffic")
        table = table.reindex(columns=range(self.slots_per_day))
        return table.sort_index().to_numpy(dtype=float)

    def __len__(self):
        return len(self.frame)

    def __repr__(self):
        return "TrafficTimeSeries(days={}, slots_per_day={}, samples={})".format(self.num_days, self.slots_per_day, len(self))


def load_series_csv(path: str, slot_minutes: int = 15) -> TrafficTimeSeries:
    frame = pd.read_csv(path)
    missing = [c for c in SERIES_COLUMNS if c not in frame.columns]
    if missing:
        raise TrafficError("{} lacks columns {}".format(path, ", ".join(missing)), path=str(path))
    logger.info("[Traffic] loaded {} samples from {}".format(len(frame), path))
    return TrafficTimeSeries(frame["day"].tolist(), frame["slot"].tolist(), frame["total_traffic"].tolist(), slot_minutes)


def save_series_csv(series: TrafficTimeSeries, path: str):
    series.frame.sort_values(["day", "slot"]).to_csv(path, index=False, columns=SERIES_COLUMNS)
