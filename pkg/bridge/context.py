# encoding:utf-8

from enum import Enum

from common import const


class CommandType(Enum):
    OPTIMIZE = 1  # 2SRG / 2SRG-NS 端到端优化
    BASELINE = 2  # 最短路基线
    ANALYZE = 3  # 流量曲线与低负载时段
    EVALUATE = 4  # 评估已保存的配置
    COMPARE = 5  # 多种方法、多个缩放系数对比
    GENERATE = 6  # 生成合成实例

    def __str__(self):
        return self.name

    @classmethod
    def from_name(cls, name: str) -> "CommandType":
        return _BY_NAME[name]


_BY_NAME = {
    const.OPTIMIZE: CommandType.OPTIMIZE,
    const.BASELINE: CommandType.BASELINE,
    const.ANALYZE: CommandType.ANALYZE,
    const.EVALUATE: CommandType.EVALUATE,
    const.COMPARE: CommandType.COMPARE,
    const.GENERATE: CommandType.GENERATE,
}


class Context:
    def __init__(self, type: CommandType = None, content=None, kwargs=None):
        self.type = type
        # RunConfig
        self.content = content
        self.kwargs = dict(kwargs or {})

    def __contains__(self, key):
        if key == "type":
            return self.type is not None
        elif key == "content":
            return self.content is not None
        else:
            return key in self.kwargs

    def __getitem__(self, key):
        if key == "type":
            return self.type
        elif key == "content":
            return self.content
        else:
            return self.kwargs[key]

    def get(self, key, default=None):
        try:
            return self.__getitem__(key)
        except KeyError:
            return default

    def __setitem__(self, key, value):
        if key == "type":
            self.type = value
        elif key == "content":
            self.content = value
        else:
            self.kwargs[key] = value

    def __str__(self):
        return "Context(type={}, kwargs={})".format(self.type, self.kwargs)
