"""
report writer factory
"""
from typing import List

from common import const
from common.errors import ConfigError


def create_writer(writer_type):
    """
    create a writer_type instance
    :param writer_type: output format code
    :return: writer instance
    """
    if writer_type == const.JSON:
        from report.json_writer import JsonReportWriter

        return JsonReportWriter()
    elif writer_type == const.CSV:
        from report.csv_writer import CsvReportWriter

        return CsvReportWriter()
    raise ConfigError("unknown output format {}".format(writer_type), output_format=writer_type)


def create_writers(output_format) -> List:
    if output_format == const.BOTH:
        return [create_writer(const.JSON), create_writer(const.CSV)]
    return [create_writer(output_format)]
