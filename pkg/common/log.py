import logging
import os
import sys

LOG_FORMAT = "[%(levelname)s][%(asctime)s][%(filename)s:%(lineno)d] - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _reset_logger(log, log_file):
    for handler in log.handlers:
        handler.close()
        log.removeHandler(handler)
        del handler
    log.handlers.clear()
    log.propagate = False
    console_handle = logging.StreamHandler(sys.stderr)
    console_handle.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
    log.addHandler(console_handle)
    # GREEN_SR_LOG_FILE 为空时只输出到控制台
    if log_file:
        file_handle = logging.FileHandler(log_file, encoding="utf-8")
        file_handle.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        log.addHandler(file_handle)


def _get_logger():
    log = logging.getLogger("green_sr")
    _reset_logger(log, os.environ.get("GREEN_SR_LOG_FILE", "run.log"))
    log.setLevel(logging.INFO)
    return log


# 日志句柄
logger = _get_logger()
