"""
Subcommand abstract class
"""

from bridge.context import Context
from bridge.reply import Reply


class Command(object):
    name = "abstract"

    def run(self, context: Context) -> Reply:
        """
        run the subcommand
        :param context: context.content holds the RunConfig
        :return: REPORT / INFO reply; library errors propagate to the Bridge
        """
        raise NotImplementedError
