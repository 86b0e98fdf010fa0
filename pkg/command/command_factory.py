"""
command factory
"""
from bridge.context import CommandType
from common.errors import ConfigError


def create_command(command_type):
    """
    create a command_type instance
    :param command_type: CommandType
    :return: command instance
    """
    if command_type == CommandType.OPTIMIZE:
        from command.optimize import OptimizeCommand

        return OptimizeCommand()
    elif command_type == CommandType.BASELINE:
        from command.baseline import BaselineCommand

        return BaselineCommand()
    elif command_type == CommandType.ANALYZE:
        from command.analyze import AnalyzeCommand

        return AnalyzeCommand()
    elif command_type == CommandType.EVALUATE:
        from command.evaluate import EvaluateCommand

        return EvaluateCommand()
    elif command_type == CommandType.COMPARE:
        from command.compare import CompareCommand

        return CompareCommand()
    elif command_type == CommandType.GENERATE:
        from command.generate import GenerateCommand

        return GenerateCommand()
    raise ConfigError("unknown command {}".format(command_type), command=str(command_type))
