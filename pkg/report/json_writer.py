from typing import List, Optional, Sequence

from common.log import logger
from common.utils import dumps_json
from report.writer import ReportWriter, column_order


class JsonReportWriter(ReportWriter):
    extension = ".json"

    def write(self, rows: List[dict], path: str, extra: Optional[dict] = None, columns: Optional[Sequence[str]] = None) -> str:
        keys = column_order(rows, columns)
        document = dict(extra or {})
        document["rows"] = [{k: row.get(k) for k in keys} for row in rows]
        with open(path, "w", encoding="utf-8") as f:
            f.write(dumps_json(document) + "\n")
        logger.info("[Report] wrote {} ({} rows)".format(path, len(rows)))
        return path
