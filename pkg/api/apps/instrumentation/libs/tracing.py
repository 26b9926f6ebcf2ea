import logging
import math
from typing import List, Optional, Sequence, Tuple

from api.apps.instrumentation.models import AlgorithmId, StepTrace
from api.apps.modinv_core.libs.inverse_algorithms import (
    EXACT_ALGORITHMS,
    TRACE_HEADERS,
    TRACE_INIT_ROW,
    euclid_inverse,
)
from api.apps.modinv_core.models import InverseOutcome, ModPair
from api.includes import exceptions
from config.preferences import AppPreferences

logger = logging.getLogger(__name__)

# 12 ln 2 / pi^2 and the additive constant of the average division count
KNUTH_SLOPE = 0.843
KNUTH_OFFSET = 1.47

# traces whose length grows with d or k rather than log n
LINEAR_TRACES = (AlgorithmId.SEQUENTIAL, AlgorithmId.BAGHDAD, AlgorithmId.FFIM_EXACT)


class TraceRecorder:
    """Collects rows as exact text and refuses to grow past max_rows"""

    def __init__(self, algorithm: AlgorithmId, max_rows: int):
        self.algorithm = algorithm
        self.max_rows = max_rows
        self.rows: List[List[str]] = []

    def __call__(self, values: Sequence):
        if len(self.rows) >= self.max_rows:
            raise exceptions.TraceLimitExceeded(
                f"{self.algorithm} trace exceeds {self.max_rows} rows"
            )
        self.rows.append([str(value) for value in values])


def expected_rows(alg: AlgorithmId, pair: ModPair) -> Optional[int]:
    """Row count of a trace whose length follows the inverse or its witness

    sequential writes d rows, baghdad k (one for e = 1) and ffim_exact the
    index i with i * e = (k - 1) * b + a. Euclid, Stein and Gordon stay
    logarithmic in n and return None.
    """
    if alg not in LINEAR_TRACES:
        return None
    reference = euclid_inverse(pair)
    e, n, k = pair.e, pair.n, reference.k
    if alg == AlgorithmId.SEQUENTIAL:
        return reference.d
    if alg == AlgorithmId.BAGHDAD:
        return max(k, 1)
    a, b = (n + 1) % e, n % e
    if e == 1 or a == 0:
        return 0
    return ((k - 1) * b + a) // e


def traced_inverse(
    alg: AlgorithmId, pair: ModPair, max_rows: Optional[int] = None
) -> Tuple[InverseOutcome, StepTrace]:
    """Runs an exact algorithm with a row recorder attached

    Raises:
        DomainError: alg is ffim_float, whose traces live in the float lab
        TraceLimitExceeded: the run needs more than max_rows rows
    """
    alg = AlgorithmId(alg)
    if alg == AlgorithmId.FFIM_FLOAT:
        raise exceptions.DomainError(
            "ffim_float is traced by the float error lab, not here"
        )
    if max_rows is None:
        max_rows = AppPreferences().trace_max_rows

    rows_needed = expected_rows(alg, pair)
    if rows_needed is not None and rows_needed > max_rows:
        raise exceptions.TraceLimitExceeded(
            f"{alg} trace of {pair} needs {rows_needed} rows, limit is {max_rows}"
        )

    recorder = TraceRecorder(alg, max_rows)
    outcome = EXACT_ALGORITHMS[alg.value](pair, recorder=recorder)
    trace = StepTrace(
        algorithm=alg,
        headers=list(TRACE_HEADERS[alg.value]),
        rows=recorder.rows,
        final=outcome,
        has_init_row=alg.value in TRACE_INIT_ROW,
    )
    logger.debug("traced %s on %s: %s rows", alg, pair, len(trace.rows))
    return outcome, trace


def knuth_expected_divisions(n: int, natural_log: bool = False) -> float:
    """Average Euclid division count, 0.843 * log2(n) + 1.47

    natural_log=True evaluates 0.843 * ln(n) + 1.47 instead, the reading under
    which 0.843 = 12 ln 2 / pi^2 matches measured division counts.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise exceptions.DomainError(f"n must be an integer >= 2, got {n!r}")
    log_n = math.log(n) if natural_log else math.log2(n)
    return KNUTH_SLOPE * log_n + KNUTH_OFFSET
