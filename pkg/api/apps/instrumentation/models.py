from enum import Enum
from typing import List, Optional

from pydantic import BaseModel

from api.apps.modinv_core.models import InverseOutcome


###################### SCHEMA ###########################


class AlgorithmId(str, Enum):
    SEQUENTIAL = "sequential"
    EUCLID = "euclid"
    STEIN = "stein"
    GORDON = "gordon"
    BAGHDAD = "baghdad"
    FFIM_EXACT = "ffim_exact"
    FFIM_FLOAT = "ffim_float"

    @classmethod
    def choices(cls):
        return tuple(i.value for i in cls)

    @classmethod
    def exact_algorithms(cls) -> List["AlgorithmId"]:
        return [i for i in cls if i != cls.FFIM_FLOAT]

    @classmethod
    def get_algorithm(cls, value: str) -> Optional["AlgorithmId"]:
        return next(
            (i for i in cls if str(i.value).casefold() == str(value).casefold()), None
        )

    def __str__(self):
        return self.value


class TraceFormat(str, Enum):
    TABLE = "table"
    JSON = "json"

    def __str__(self):
        return self.value


class StepTrace(BaseModel):
    """Per-iteration snapshots of one algorithm run, values as exact text"""

    algorithm: AlgorithmId
    headers: List[str]
    rows: List[List[str]]
    final: InverseOutcome
    has_init_row: bool = False

    def column(self, header: str) -> List[str]:
        index = self.headers.index(header)
        return [row[index] for row in self.rows]
