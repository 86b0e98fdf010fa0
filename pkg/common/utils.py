import json
import os


def slot_to_time(slot: int, slot_minutes: int) -> str:
    """
    时间槽序号转换为 HH:MM，slot 可以等于一天的槽数 (表示 24:00)
    """
    minutes = int(slot) * int(slot_minutes)
    return "{:02d}:{:02d}".format(minutes // 60, minutes % 60)


def leq_tol(lhs: float, rhs: float, tol: float = 1e-9) -> bool:
    return lhs <= rhs + tol * max(1.0, abs(rhs))


def _json_default(obj):
    # numpy 标量和数组
    if hasattr(obj, "tolist"):
        return obj.tolist()
    raise TypeError("Object of type {} is not JSON serializable".format(type(obj).__name__))


def dumps_json(obj) -> str:
    # 排序键，保证同样的输入得到逐字节相同的报告
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False, allow_nan=False, default=_json_default)


def ensure_dir(path: str) -> str:
    if path and not os.path.exists(path):
        os.makedirs(path)
    return path
