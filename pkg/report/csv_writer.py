from typing import List, Optional, Sequence

import pandas as pd

from common.log import logger
from report.writer import ReportWriter, column_order


class CsvReportWriter(ReportWriter):
    """flat table for plotting; document-level fields are dropped"""

    extension = ".csv"

    def write(self, rows: List[dict], path: str, extra: Optional[dict] = None, columns: Optional[Sequence[str]] = None) -> str:
        keys = column_order(rows, columns)
        frame = pd.DataFrame.from_records(rows, columns=keys)
        frame.to_csv(path, index=False)
        logger.info("[Report] wrote {} ({} rows)".format(path, len(frame)))
        return path
