# encoding:utf-8

import argparse
import sys

from bridge.bridge import Bridge
from bridge.context import CommandType, Context
from common import const
from common.errors import ConfigError, GreenSrError
from common.log import logger
from common.utils import dumps_json
from config import RunConfig, available_setting, load_config, parse_value

# 命令行选项 -> 配置项
OPTION_SETTINGS = {
    "theta": "theta",
    "mode": "mode",
    "solver": "solver_backend",
    "output_dir": "output_dir",
    "output_format": "output_format",
    "seed": "seed",
}
PATH_OPTIONS = ["graph", "demands", "example", "name", "configuration", "series", "scales", "nodes", "days"]


def _instance_options(parser):
    parser.add_argument("--graph", help="Repetita .graph file")
    parser.add_argument("--demands", help="Repetita .demands file")
    parser.add_argument("--example", help="built-in instance instead of files, e.g. steering")
    parser.add_argument("--name", help="instance name used for output files")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="config file, default config.json then config-template.json")
    common.add_argument("--theta", type=float)
    common.add_argument("--mode", choices=const.MODES)
    common.add_argument("--solver", choices=const.SOLVER_BACKENDS)
    common.add_argument("--output-dir", dest="output_dir")
    common.add_argument("--format", dest="output_format", choices=[const.JSON, const.CSV, const.BOTH])
    common.add_argument("--seed", type=int)
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE", help="override any config key")

    parser = argparse.ArgumentParser(prog="green-sr", description="energy-aware port deactivation with 2-segment routing")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(const.OPTIMIZE, parents=[common], help="2SRG / 2SRG-NS end to end")
    _instance_options(p)
    p = sub.add_parser(const.BASELINE, parents=[common], help="shortest-path routing baseline")
    _instance_options(p)
    p = sub.add_parser(const.EVALUATE, parents=[common], help="MLU and energy of a stored configuration")
    _instance_options(p)
    p.add_argument("--configuration", required=True)
    p = sub.add_parser(const.COMPARE, parents=[common], help="every method, optionally at several traffic scales")
    _instance_options(p)
    p.add_argument("--scales", type=float, nargs="+")
    p.add_argument("--series", help="take scales from the low-load window of this traffic CSV")
    p = sub.add_parser(const.ANALYZE, parents=[common], help="daily traffic profile and low-load window")
    p.add_argument("--series", required=True)
    p.add_argument("--name")
    p = sub.add_parser(const.GENERATE, parents=[common], help="synthetic ISP-like instance and traffic series")
    p.add_argument("--nodes", type=int, default=12)
    p.add_argument("--days", type=int, default=7)
    p.add_argument("--name")
    return parser


def build_run_config(args) -> RunConfig:
    config = load_config(args.config)
    settings = dict(config)
    for option, key in OPTION_SETTINGS.items():
        if getattr(args, option, None) is not None:
            settings[key] = getattr(args, option)
    for item in args.overrides:
        key, sep, value = item.partition("=")
        if not sep or key not in available_setting:
            raise ConfigError("bad --set {}, expected KEY=VALUE with a known key".format(item), override=item)
        settings[key] = parse_value(value)
    paths = {name: getattr(args, name, None) for name in PATH_OPTIONS}
    return RunConfig(settings, **paths).validate()


def run(command: str, run_config: RunConfig) -> int:
    """
    :return: 进程退出码，0 表示成功
    """
    reply = Bridge().fetch_reply(Context(CommandType.from_name(command), run_config))
    print(dumps_json(reply.content))
    if not reply.ok:
        return 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run_config = build_run_config(args)
    except GreenSrError as e:
        logger.error("[Config] {}".format(e.message))
        print(dumps_json(e.to_dict()))
        return 2
    return run(args.command, run_config)


if __name__ == "__main__":
    sys.exit(main())
