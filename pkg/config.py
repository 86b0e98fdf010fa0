# encoding:utf-8

import copy
import json
import logging
import os

from common import const
from common.errors import ConfigError
from common.log import logger

# 将所有可用的配置项写在字典里, 请使用小写字母
# 这里的值就是默认值，config.json 或环境变量中的同名配置会覆盖它们
available_setting = {
    # MLU 上限 theta
    "theta": 0.7,
    # 需求缩放系数，Repetita 数据的准备方式用 0.5
    "traffic_scale": 1.0,
    # 每条链路的并行端口数
    "ports_per_link": 4,
    # 单端口容量，null 表示链路带宽 / ports_per_link
    "port_capacity": None,
    # 每块线卡的端口槽位数
    "ports_per_linecard": 8,
    # 路由模式: splitting (2SRG) | no-splitting (2SRG-NS)
    "mode": const.SPLITTING,
    # 最短路分流: even-split | single-path
    "ecmp_mode": const.EVEN_SPLIT,
    # 求解器: highs | simplex | pulp
    "solver_backend": const.HIGHS,
    "time_limit": 3600,  # 秒
    "mip_gap": 1e-4,
    # 端口变量取整数 (MILP)，默认求解松弛问题后取整
    "port_integrality": False,
    # 可选的中间节点集合，null 表示所有路由器
    "candidate_intermediates": None,
    # 能耗模型
    "linecard_share": 0.8,
    "linecard_energy": 1.0,
    "port_energy": 0.0,
    # 流量分析
    "confidence_level": 0.7,
    "low_load_fraction": 0.5,
    "slot_minutes": 15,
    # Repetita 解析
    "accept_asymmetric_bandwidth": False,
    # 需求数上限，超过时只保留最大的需求
    "max_demands": None,
    # 精确求解的规模上限
    "oracle_max_ports": 10,
    "oracle_max_nodes": 6,
    # 输出
    "output_dir": "output",
    "output_format": const.JSON,  # json | csv | both
    "seed": 0,
    "debug": False,
}

_POSITIVE = ["traffic_scale", "ports_per_link", "ports_per_linecard", "time_limit", "slot_minutes", "linecard_energy", "oracle_max_ports", "oracle_max_nodes"]
_CHOICES = {
    "mode": const.MODES,
    "ecmp_mode": const.ECMP_MODES,
    "solver_backend": const.SOLVER_BACKENDS,
    "output_format": [const.JSON, const.CSV, const.BOTH],
}


class Config(dict):
    def __init__(self, d=None):
        super().__init__()
        for k, v in available_setting.items():
            self[k] = copy.deepcopy(v)
        for k, v in (d or {}).items():
            self[k] = v

    def __getitem__(self, key):
        if key not in available_setting:
            raise ConfigError("key {} not in available_setting".format(key), key=key)
        return super().__getitem__(key)

    def __setitem__(self, key, value):
        if key not in available_setting:
            raise ConfigError("key {} not in available_setting".format(key), key=key)
        return super().__setitem__(key, value)

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def set(self, key, value):
        self[key] = value


class RunConfig(Config):
    """
    A Config plus the paths and names supplied on the command line.
    """

    def __init__(self, d=None, **paths):
        super().__init__(d)
        self.paths = {k: v for k, v in paths.items() if v is not None}

    def path(self, name, default=None):
        return self.paths.get(name, default)

    def validate(self) -> "RunConfig":
        problems = []
        theta = self.get("theta")
        if not isinstance(theta, (int, float)) or not 0 < theta <= 1:
            problems.append("theta must lie in (0, 1], got {}".format(theta))
        for key in _POSITIVE:
            value = self.get(key)
            if not isinstance(value, (int, float)) or isinstance(value, bool) or not value > 0:
                problems.append("{} must be positive, got {}".format(key, value))
        for key in ["port_capacity", "max_demands"]:
            value = self.get(key)
            if value is not None and (not isinstance(value, (int, float)) or not value > 0):
                problems.append("{} must be positive or null, got {}".format(key, value))
        for key in ["mip_gap", "port_energy"]:
            value = self.get(key)
            if not isinstance(value, (int, float)) or value < 0:
                problems.append("{} must be non-negative, got {}".format(key, value))
        share = self.get("linecard_share")
        if not isinstance(share, (int, float)) or not 0 <= share <= 1:
            problems.append("linecard_share must lie in [0, 1], got {}".format(share))
        for key in ["confidence_level", "low_load_fraction"]:
            value = self.get(key)
            if not isinstance(value, (int, float)) or not 0 < value < 1:
                problems.append("{} must lie in (0, 1), got {}".format(key, value))
        for key, choices in _CHOICES.items():
            if self.get(key) not in choices:
                problems.append("{} must be one of {}, got {}".format(key, ", ".join(choices), self.get(key)))
        if isinstance(self.get("slot_minutes"), int) and self.get("slot_minutes") > 0 and (24 * 60) % self.get("slot_minutes"):
            problems.append("slot_minutes must divide a day, got {}".format(self.get("slot_minutes")))
        if problems:
            raise ConfigError("invalid configuration: " + "; ".join(problems), problems=problems)
        return self


config = Config()


def parse_value(value: str):
    try:
        return json.loads(value)
    except ValueError:
        if value.lower() in ("true", "false"):
            return value.lower() == "true"
        return value


def load_config(config_path=None) -> Config:
    global config
    if config_path is None:
        config_path = os.path.join(get_root(), "config.json")
        if not os.path.exists(config_path):
            logger.info("[Config] config.json not found, using config-template.json")
            config_path = os.path.join(get_root(), "config-template.json")
    elif not os.path.exists(config_path):
        raise ConfigError("config file {} does not exist".format(config_path), path=str(config_path))

    try:
        config = Config(json.loads(read_file(config_path)))
    except ValueError as e:
        raise ConfigError("config file {} is not valid JSON: {}".format(config_path, e), path=str(config_path))

    # override config with environment variables of the same (upper-cased) name
    for name, value in os.environ.items():
        name = name.lower()
        if name in available_setting:
            logger.info("[Config] override config by environ args: {}={}".format(name, value))
            config[name] = parse_value(value)

    if config.get("debug", False):
        logger.setLevel(logging.DEBUG)
        logger.debug("[Config] set log level to DEBUG")
    logger.debug("[Config] load config: {}".format(dict(config)))
    return config


def get_root():
    return os.path.dirname(os.path.abspath(__file__))


def read_file(path):
    with open(path, mode="r", encoding="utf-8") as f:
        return f.read()


def conf():
    return config
