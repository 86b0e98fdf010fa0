from bridge.context import CommandType, Context
from bridge.reply import Reply, ReplyType
from command.command_factory import create_command
from common.errors import GreenSrError
from common.log import logger
from common.singleton import singleton
from lp.solver_factory import create_solver


@singleton
class Bridge(object):
    def __init__(self):
        self.solvers = {}
        self.commands = {}

    # 求解器按后端缓存
    def get_solver(self, backend: str):
        if self.solvers.get(backend) is None:
            logger.info("[Bridge] create solver {}".format(backend))
            self.solvers[backend] = create_solver(backend)
        return self.solvers[backend]

    def get_command(self, command_type: CommandType):
        if self.commands.get(command_type) is None:
            self.commands[command_type] = create_command(command_type)
        return self.commands[command_type]

    def fetch_reply(self, context: Context) -> Reply:
        """
        执行命令；库函数抛出的异常在这里统一转换成 ERROR 类型的 Reply
        """
        try:
            return self.get_command(context.type).run(context)
        except GreenSrError as e:
            logger.error("[Bridge] {} failed: {}".format(context.type, e.message))
            return Reply(ReplyType.ERROR, e.to_dict())
        except Exception as e:
            logger.exception(e)
            return Reply(ReplyType.ERROR, {"error": "internal", "message": str(e), "details": {"exception": type(e).__name__}})

    def reset(self):
        """
        清空缓存的求解器和命令
        """
        self.__init__()
