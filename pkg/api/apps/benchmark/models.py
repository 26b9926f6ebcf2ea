from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, root_validator, validator


###################### SCHEMA ###########################


class EMode(str, Enum):
    RANDOM_COPRIME = "random_coprime"
    FIXED_LIST = "fixed_list"

    def __str__(self):
        return self.value


class ReportFormat(str, Enum):
    CSV = "csv"
    JSON = "json"

    @classmethod
    def from_path(cls, path: str) -> "ReportFormat":
        return cls.JSON if str(path).lower().endswith(".json") else cls.CSV

    def __str__(self):
        return self.value


# presets honouring the small public exponent recommendation
SMALL_E_PRESET = (3, 5, 17, 257, 65537)


class WorkloadSpec(BaseModel):
    """Seeded description of a benchmark workload

    e_fixed empty means e is drawn uniformly among values coprime with n;
    n_fixed pins every modulus and n_bits is then its bit length.
    """

    n_bits: int = 0
    samples: int
    seed: int = 0
    e_fixed: List[int] = []
    n_fixed: Optional[int] = None

    @validator("samples")
    def check_samples(cls, value):
        if value < 1:
            raise ValueError("samples must be at least 1")
        return value

    @validator("e_fixed", each_item=True)
    def check_fixed_exponent(cls, value):
        if value < 2:
            raise ValueError("fixed exponents must be at least 2")
        return value

    @validator("n_fixed")
    def check_n_fixed(cls, value):
        if value is not None and value < 3:
            raise ValueError("fixed modulus must be at least 3")
        return value

    @root_validator(skip_on_failure=True)
    def check_n_bits(cls, values):
        if values.get("n_fixed") is not None:
            values["n_bits"] = values["n_fixed"].bit_length()
        if values["n_bits"] < 2:
            raise ValueError("n_bits must be at least 2")
        return values

    @property
    def e_mode(self) -> EMode:
        return EMode.FIXED_LIST if self.e_fixed else EMode.RANDOM_COPRIME

    @property
    def e_mode_label(self) -> str:
        if self.e_mode == EMode.FIXED_LIST:
            return "fixed:" + ",".join(str(e) for e in self.e_fixed)
        return str(self.e_mode)


class BenchRow(BaseModel):
    algorithm: str
    n_bits: int = 0
    e_mode: str
    samples: int
    mean_iters: float
    median_iters: float
    max_iters: int
    mean_divs: float
    mean_mults: float
    mean_adds: float
    mean_subs: float
    mean_shifts: float
    mean_cmps: float
    mean_ns: float
    failures: int = 0


class BenchReport(BaseModel):
    rows: List[BenchRow]

    def row(self, algorithm: str) -> BenchRow:
        return next(row for row in self.rows if row.algorithm == str(algorithm))

    @property
    def failures(self) -> int:
        return sum(row.failures for row in self.rows)
