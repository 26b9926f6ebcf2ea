import io
import os
from typing import List

import pandas


class FileUtils:
    """class is responsible for any read/write file operations
    For example: write report file, frame records to csv etc
    """

    def write_text_file(self, file_path: str, content: str) -> str:
        """Writes a text report to disk

        Args:
            file_path [str]: destination path
            content [str]: file content

        Returns:
            str: absolute path of the written file

        Raises:
            OSError: when the path is not writable
        """
        abs_path = os.path.abspath(file_path)
        with open(abs_path, "w", encoding="utf-8", newline="") as file:
            file.write(content)
        return abs_path

    def write_csv_text(self, data: List[dict], columns: List[str]) -> str:
        """Writes records to csv text with a fixed column order

        Args:
            data [List]: list of dictionaries of records
            columns [List]: header order

        Returns:
            str: csv content
        """
        dataframe = pandas.DataFrame(data, columns=columns)
        csv_file = io.StringIO()
        dataframe.to_csv(csv_file, index=False, lineterminator="\n")
        return csv_file.getvalue()

    def read_csv_text(self, content: str) -> List[dict]:
        """Reads csv text back to records, every cell kept as text"""
        dataframe = pandas.read_csv(
            io.StringIO(content), dtype=str, keep_default_na=False
        )
        return dataframe.to_dict(orient="records")
