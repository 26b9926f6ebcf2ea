import math
from typing import List, Optional

from pydantic import BaseModel, StrictInt, root_validator, validator


###################### SCHEMA ###########################


class ModPair(BaseModel):
    """A validated problem instance (e, n): n >= 2, 1 <= e < n, gcd(e, n) = 1

    Build through libs.arithmetic.make_pair to get normalization of e and the
    NoInverse error; direct construction only validates.
    """

    e: StrictInt
    n: StrictInt

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def check_pair(cls, values):
        e, n = values["e"], values["n"]
        if n < 2:
            raise ValueError("modulus n must be at least 2")
        if not 1 <= e < n:
            raise ValueError("e must lie in [1, n)")
        if math.gcd(e, n) != 1:
            raise ValueError(f"no inverse: gcd={math.gcd(e, n)}")
        return values

    def __str__(self):
        return f"(e={self.e}, n={self.n})"


class OpCounts(BaseModel):
    """Tallies of the arithmetic executed by an algorithm's main loop"""

    additions: int = 0
    subtractions: int = 0
    multiplications: int = 0
    divisions: int = 0
    shifts: int = 0
    comparisons: int = 0

    @validator("*")
    def check_non_negative(cls, value):
        if value < 0:
            raise ValueError("operation counts cannot be negative")
        return value


class InverseOutcome(BaseModel):
    """Result of one inverse computation.

    e * d = 1 + k * n holds exactly, with 1 <= d < n and 0 <= k < e.
    """

    d: int
    k: int
    iterations: int
    ops: OpCounts = OpCounts()


class Discrepancy(BaseModel):
    algorithm: str
    e: int
    n: int
    expected: int
    actual: Optional[int] = None
    error: Optional[str] = None

    def __str__(self):
        found = self.actual if self.error is None else self.error
        return (
            f"discrepancy: alg={self.algorithm} e={self.e} n={self.n} "
            f"expected={self.expected} got={found}"
        )


class ValidationSummary(BaseModel):
    n_max: int
    pairs_checked: int
    algorithms: List[str]
    discrepancy: Optional[Discrepancy] = None

    @property
    def passed(self) -> bool:
        return self.discrepancy is None
