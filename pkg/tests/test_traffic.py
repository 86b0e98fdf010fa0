import math
import os
import tempfile
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from common.errors import ProfileError, TrafficError
from ingest.synthetic import generate_traffic_series
from traffic.matrix import TrafficMatrix, downsample_matrix, scale_matrix
from traffic.profile import DailyProfile, detect_low_load, fit_profile, low_load_table, spike_headroom
from traffic.series import TrafficTimeSeries, load_series_csv, save_series_csv


def brute_force_window(upper, threshold):
    """longest circular run of slots with upper <= threshold, smallest start on ties"""
    n = len(upper)
    best_len, best_start = 0, None
    for start in range(n):
        length = 0
        while length < n and upper[(start + length) % n] <= threshold:
            length += 1
        if length > best_len:
            best_len, best_start = length, start
    return best_start, best_len


class TestTrafficMatrix(unittest.TestCase):
    def test_basic(self):
        matrix = TrafficMatrix({("a", "b"): 2.0, ("b", "a"): 0.0})
        self.assertEqual(matrix[("a", "b")], 2.0)
        self.assertEqual(matrix[("a", "c")], 0.0)
        self.assertEqual(matrix.nonzero(), [(("a", "b"), 2.0)])
        self.assertEqual(matrix.total(), 2.0)
        self.assertEqual(scale_matrix(matrix, 0.5)[("a", "b")], 1.0)

    def test_invalid(self):
        with self.assertRaises(TrafficError):
            TrafficMatrix({("a", "a"): 1.0})
        with self.assertRaises(TrafficError):
            TrafficMatrix({("a", "b"): -1.0})
        with self.assertRaises(TrafficError):
            scale_matrix(TrafficMatrix(), 0)

    def test_downsample(self):
        matrix = TrafficMatrix({("a", "b"): 5.0, ("b", "a"): 3.0, ("a", "c"): 2.0})
        kept, dropped = downsample_matrix(matrix, 2)
        self.assertEqual(sorted(kept.as_dict()), [("a", "b"), ("b", "a")])
        self.assertAlmostEqual(dropped, 0.2)
        same, none = downsample_matrix(matrix, 5)
        self.assertEqual(same, matrix)
        self.assertEqual(none, 0.0)


class TestTrafficSeries(unittest.TestCase):
    def test_csv_round_trip(self):
        series = generate_traffic_series(3, seed=1)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "series.csv")
            save_series_csv(series, path)
            loaded = load_series_csv(path)
        np.testing.assert_allclose(loaded.grid(), series.grid())
        self.assertEqual(loaded.num_days, 3)
        self.assertEqual(loaded.slots_per_day, 96)

    def test_invalid_grid(self):
        with self.assertRaises(TrafficError):
            TrafficTimeSeries([0, 0], [1, 1], [1.0, 2.0])
        with self.assertRaises(TrafficError):
            TrafficTimeSeries([0], [96], [1.0])
        with self.assertRaises(TrafficError):
            TrafficTimeSeries([0], [0], [1.0], slot_minutes=7)


class TestProfile(unittest.TestCase):
    def test_fit(self):
        """两天的数据：均值与总体标准差"""
        series = TrafficTimeSeries([0, 0, 1, 1], [0, 1, 0, 1], [1.0, 2.0, 3.0, 2.0], slot_minutes=720)
        profile = fit_profile(series, 0.7)
        np.testing.assert_allclose(profile.mean, [2.0, 2.0])
        np.testing.assert_allclose(profile.std, [1.0, 0.0])
        self.assertAlmostEqual(profile.z, 1.0364333894937898, places=9)
        np.testing.assert_allclose(profile.upper, profile.mean + profile.z * profile.std)

    def test_fit_errors(self):
        one_day = TrafficTimeSeries([0, 0], [0, 1], [1.0, 2.0], slot_minutes=720)
        with self.assertRaises(ProfileError):
            fit_profile(one_day, 0.7)
        gap = TrafficTimeSeries([0, 0, 1], [0, 1, 0], [1.0, 2.0, 1.0], slot_minutes=720)
        with self.assertRaises(ProfileError):
            fit_profile(gap, 0.7)
        with self.assertRaises(ProfileError):
            fit_profile(gap, 1.0)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 6), st.sampled_from([1, 2, 3, 4, 6, 8]), st.randoms(use_true_random=False))
    def test_day_order_does_not_matter(self, days, slots, rnd):
        values = [rnd.uniform(0.0, 100.0) for _ in range(days * slots)]
        day_ids = [d for d in range(days) for _ in range(slots)]
        slot_ids = [s for _ in range(days) for s in range(slots)]
        relabel = list(range(days))
        rnd.shuffle(relabel)
        original = fit_profile(TrafficTimeSeries(day_ids, slot_ids, values, slot_minutes=1440 // slots), 0.9)
        shuffled = fit_profile(TrafficTimeSeries([relabel[d] for d in day_ids], slot_ids, values, slot_minutes=1440 // slots), 0.9)
        np.testing.assert_allclose(shuffled.mean, original.mean, rtol=1e-12, atol=1e-9)
        np.testing.assert_allclose(shuffled.std, original.std, rtol=1e-9, atol=1e-9)
        np.testing.assert_allclose(shuffled.upper, original.upper, rtol=1e-9, atol=1e-9)

    def test_noise_free_sine_matches_analytic_window(self):
        """sigma = 0 时窗口与解析解相差不超过一个时间槽"""
        series = generate_traffic_series(3, seed=0, amplitude=0.9, noise=0.0)
        window = detect_low_load(fit_profile(series, 0.7), 0.5)
        # 1 + 0.9 sin(2 pi h / 24) <= 0.5 * 1.9
        offset = math.asin(0.05 / 0.9) * 24 / (2 * math.pi)
        start_h, end_h = 12 + offset, 24 - offset
        self.assertLessEqual(abs(window.start_slot - start_h * 4), 1)
        self.assertLessEqual(abs(window.end_slot + 1 - end_h * 4), 1)
        self.assertFalse(window.wraps)

    def test_noisy_series_matches_slot_scan(self):
        for seed in range(5):
            series = generate_traffic_series(7, seed=seed, phase=seed)
            profile = fit_profile(series, 0.7)
            window = detect_low_load(profile, 0.5)
            start, length = brute_force_window(list(profile.upper), 0.5 * max(profile.mean))
            self.assertEqual((window.start_slot, window.length), (start, length))

    def test_window_wraps_midnight(self):
        mean = np.array([1.0, 1.0, 10.0, 10.0, 10.0, 1.0])
        profile = DailyProfile(mean, np.zeros(6), 0.7, mean, mean, slot_minutes=240)
        window = detect_low_load(profile, 0.5)
        self.assertEqual((window.start_slot, window.end_slot, window.length), (5, 1, 3))
        self.assertTrue(window.wraps)
        self.assertEqual(window.slots(), [5, 0, 1])
        self.assertEqual((window.start_time, window.end_time), ("20:00", "08:00"))

    def test_empty_and_full_windows(self):
        flat = np.ones(4)
        profile = DailyProfile(flat, np.zeros(4), 0.7, flat, flat, slot_minutes=360)
        self.assertTrue(detect_low_load(profile, 0.5).is_empty)
        self.assertIsNone(detect_low_load(profile, 0.5).start_time)
        low = DailyProfile(flat, np.zeros(4), 0.7, flat, flat * 0.1, slot_minutes=360)
        self.assertEqual(detect_low_load(low, 0.5).length, 4)
        self.assertEqual(len(low_load_table(profile, [0.3, 0.6])), 2)
        with self.assertRaises(ProfileError):
            detect_low_load(profile, 1.0)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.tuples(st.floats(0.1, 10.0), st.floats(0.0, 5.0)), min_size=1, max_size=40), st.floats(0.05, 0.95))
    def test_window_is_longest_run(self, samples, fraction):
        mean = np.array([m for m, _ in samples])
        upper = mean + np.array([d for _, d in samples])
        profile = DailyProfile(mean, np.zeros(len(mean)), 0.7, mean, upper)
        window = detect_low_load(profile, fraction)
        start, length = brute_force_window(list(upper), fraction * float(np.max(mean)))
        self.assertEqual(window.length, length)
        if length:
            self.assertEqual(window.start_slot, start)

    def test_spike_headroom(self):
        self.assertAlmostEqual(spike_headroom(0.7), 3.0 / 7.0)
        self.assertEqual(spike_headroom(1.0), 0.0)
        with self.assertRaises(ProfileError):
            spike_headroom(0.0)


if __name__ == "__main__":
    unittest.main()
