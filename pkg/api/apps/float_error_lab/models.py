import json
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, validator


###################### SCHEMA ###########################


class Verdict(str, Enum):
    AGREE = "agree"
    WRONG_ANSWER = "wrong_answer"
    MISSED_TERMINATION = "missed_termination"
    EARLY_TERMINATION = "early_termination"

    @classmethod
    def choices(cls):
        return tuple(i.value for i in cls)

    def __str__(self):
        return self.value


class UlpGap(BaseModel):
    """Exact distance between fl(1/e), fl(n/e) and the true quotients"""

    xi1: Fraction
    xi2: Fraction

    class Config:
        arbitrary_types_allowed = True


class FloatProbeResult(BaseModel):
    e: int
    n: int
    epsilon: float
    k_exact: int
    i_exact: int
    d_exact: int
    i_float: Optional[int] = None
    d_float: Optional[int] = None
    r_error: float
    verdict: Verdict

    @validator("r_error")
    def check_r_error(cls, value):
        if value < 0:
            raise ValueError("r_error cannot be negative")
        return value

    @property
    def agrees(self) -> bool:
        return self.verdict == Verdict.AGREE


class Witness(BaseModel):
    e: int
    n: int
    k: int
    verdict: Verdict

    def to_dict(self) -> dict:
        return {
            "e": str(self.e),
            "n": str(self.n),
            "k": str(self.k),
            "verdict": str(self.verdict),
        }


class FailureReport(BaseModel):
    epsilon: float
    pairs: int
    verdicts: Dict[Verdict, int]
    decile_mean_r_error: List[Optional[float]]
    witnesses: List[Witness] = []

    @property
    def failures(self) -> int:
        return sum(
            count for verdict, count in self.verdicts.items() if verdict != Verdict.AGREE
        )

    def populated_deciles(self) -> List[float]:
        return [value for value in self.decile_mean_r_error if value is not None]

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "pairs": self.pairs,
            "verdicts": {str(verdict): count for verdict, count in self.verdicts.items()},
            "decile_mean_r_error": list(self.decile_mean_r_error),
            "witnesses": [witness.to_dict() for witness in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
