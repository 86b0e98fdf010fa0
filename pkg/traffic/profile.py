"""
Daily traffic profile: per-slot Gaussian fit, confidence band and low-load window detection.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm

from common.errors import ProfileError
from common.log import logger
from common.utils import slot_to_time
from traffic.series import TrafficTimeSeries


@dataclass(frozen=True)
class DailyProfile:
    mean: np.ndarray
    std: np.ndarray
    confidence_level: float
    lower: np.ndarray
    upper: np.ndarray
    slot_minutes: int = 15

    @property
    def slots_per_day(self) -> int:
        return len(self.mean)

    @property
    def z(self) -> float:
        return float(norm.ppf((1.0 + self.confidence_level) / 2.0))


@dataclass(frozen=True)
class LowLoadWindow:
    start_slot: Optional[int]
    end_slot: Optional[int]  # inclusive, may be < start_slot when the window wraps past midnight
    length: int
    slots_per_day: int
    slot_minutes: int

    @property
    def is_empty(self) -> bool:
        return self.length == 0

    @property
    def wraps(self) -> bool:
        return not self.is_empty and self.end_slot < self.start_slot

    def slots(self) -> List[int]:
        if self.is_empty:
            return []
        return [(self.start_slot + i) % self.slots_per_day for i in range(self.length)]

    @property
    def start_time(self) -> Optional[str]:
        return None if self.is_empty else slot_to_time(self.start_slot, self.slot_minutes)

    @property
    def end_time(self) -> Optional[str]:
        # 结束时刻为最后一个时间槽的结束
        if self.is_empty:
            return None
        end = (self.end_slot + 1) % self.slots_per_day
        if end == 0:
            end = self.slots_per_day
        return slot_to_time(end, self.slot_minutes)

    def to_dict(self) -> dict:
        return {
            "start_slot": self.start_slot,
            "end_slot": self.end_slot,
            "length": self.length,
            "start_time": self.start_time,
            "end_time": self.end_time,
            "hours": self.length * self.slot_minutes / 60.0,
        }


def fit_profile(series: TrafficTimeSeries, confidence_level: float) -> DailyProfile:
    """
    mu(t) = (1/n) sum Tr(t), sigma(t) = sqrt((1/n) sum (Tr(t) - mu(t))^2)
    band = mu +- z * sigma, z = Phi^-1((1 + level) / 2)
    """
    if not 0 < confidence_level < 1:
        raise ProfileError("confidence level must lie in (0, 1), got {}".format(confidence_level))
    grid = series.grid()
    if grid.shape[0] < 2:
        raise ProfileError("at least 2 days are needed to estimate deviations, got {}".format(grid.shape[0]), days=int(grid.shape[0]))
    missing = np.argwhere(np.isnan(grid))
    if len(missing):
        slots = sorted({int(s) for _, s in missing})
        raise ProfileError("missing samples for slots {}".format(slots[:10]), slots=slots)
    mean = grid.mean(axis=0)
    std = grid.std(axis=0, ddof=0)
    z = float(norm.ppf((1.0 + confidence_level) / 2.0))
    logger.debug("[Traffic] fitted {} slots over {} days, z={:.4f}".format(grid.shape[1], grid.shape[0], z))
    return DailyProfile(mean, std, float(confidence_level), mean - z * std, mean + z * std, series.slot_minutes)


def detect_low_load(profile: DailyProfile, fraction: float) -> LowLoadWindow:
    """
    最长的连续时间窗口 (可跨越午夜)，其中置信区间上界 <= fraction * max mu(t)
    同样长度时取起始槽最小的窗口；没有满足条件的槽时返回空窗口
    """
    if not 0 < fraction < 1:
        raise ProfileError("fraction must lie in (0, 1), got {}".format(fraction))
    n = profile.slots_per_day
    threshold = fraction * float(np.max(profile.mean))
    ok = [bool(u <= threshold) for u in profile.upper]
    if all(ok):
        return LowLoadWindow(0, n - 1, n, n, profile.slot_minutes)
    if not any(ok):
        return LowLoadWindow(None, None, 0, n, profile.slot_minutes)

    # 从一个不满足条件的槽之后开始扫描，环形窗口就变成了线性扫描
    first_bad = ok.index(False)
    best: Tuple[int, int] = (0, n)  # (-length, start)
    run_start, run_len = None, 0
    for step in range(1, n + 1):
        slot = (first_bad + step) % n
        if ok[slot]:
            if run_len == 0:
                run_start = slot
            run_len += 1
            best = min(best, (-run_len, run_start))
        else:
            run_len = 0
    length, start = -best[0], best[1]
    return LowLoadWindow(start, (start + length - 1) % n, length, n, profile.slot_minutes)


def low_load_table(profile: DailyProfile, fractions: Sequence[float]) -> List[Tuple[float, LowLoadWindow]]:
    return [(f, detect_low_load(profile, f)) for f in fractions]


def spike_headroom(theta: float) -> float:
    """relative growth of all demands an MLU of theta absorbs before a link reaches 100 %"""
    if not 0 < theta <= 1:
        raise ProfileError("theta must lie in (0, 1], got {}".format(theta))
    return 1.0 / theta - 1.0
