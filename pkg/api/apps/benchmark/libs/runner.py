import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from api.apps.benchmark.models import BenchReport, BenchRow, WorkloadSpec
from api.apps.instrumentation.models import AlgorithmId
from api.apps.modinv_core.libs.arithmetic import verify_inverse
from api.apps.modinv_core.libs.inverse_algorithms import EXACT_ALGORITHMS
from api.apps.modinv_core.models import InverseOutcome, ModPair
from api.includes import exceptions
from config.preferences import AppPreferences

logger = logging.getLogger(__name__)

Measurement = Tuple[InverseOutcome, int]

# BenchRow field -> OpCounts field
OP_COLUMNS = (
    ("mean_divs", "divisions"),
    ("mean_mults", "multiplications"),
    ("mean_adds", "additions"),
    ("mean_subs", "subtractions"),
    ("mean_shifts", "shifts"),
    ("mean_cmps", "comparisons"),
)


class BenchmarkRunner:
    """Times and verifies each (pair, algorithm) and aggregates per algorithm"""

    def __init__(
        self,
        pairs: Sequence[ModPair],
        algs: Sequence[AlgorithmId],
        spec: Optional[WorkloadSpec] = None,
        repetitions: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        preferences = AppPreferences()
        self.pairs = list(pairs)
        self.algs = [AlgorithmId(alg) for alg in algs]
        self.spec = spec
        self.repetitions = repetitions or preferences.bench_repetitions
        self.workers = workers or preferences.bench_workers
        self.__validate()

    def __validate(self):
        if not self.pairs:
            raise exceptions.DomainError("benchmark needs at least one pair")
        if not self.algs:
            raise exceptions.DomainError("benchmark needs at least one algorithm")
        if AlgorithmId.FFIM_FLOAT in self.algs:
            raise exceptions.DomainError(
                "ffim_float is measured by the float error lab, not the benchmark"
            )
        if self.repetitions < 1 or self.workers < 1:
            raise exceptions.DomainError("repetitions and workers must be at least 1")

    def measure(self, alg: AlgorithmId, pair: ModPair) -> Measurement:
        """Median wall time of the algorithm call, after verifying its result"""
        inverse_function = EXACT_ALGORITHMS[alg.value]
        timings = []
        outcome = None
        for _ in range(self.repetitions):
            try:
                started = time.perf_counter_ns()
                outcome = inverse_function(pair)
                timings.append(time.perf_counter_ns() - started)
            except exceptions.InternalConsistencyError:
                outcome = None
                break

        if outcome is None or not (
            verify_inverse(pair, outcome.d)
            and pair.e * outcome.d == 1 + outcome.k * pair.n
        ):
            logger.error("verification failed: alg=%s e=%s n=%s", alg, pair.e, pair.n)
            raise exceptions.VerificationFailure(str(alg), pair.e, pair.n)
        return outcome, int(np.median(timings))

    def labels(self) -> Tuple[int, str]:
        if self.spec is not None:
            return self.spec.n_bits, self.spec.e_mode_label
        return max(pair.n.bit_length() for pair in self.pairs), "custom"

    def aggregate(self, alg: AlgorithmId, measurements: List[Measurement]) -> BenchRow:
        n_bits, e_mode = self.labels()
        iterations = np.array([outcome.iterations for outcome, _ in measurements])
        timings = np.array([elapsed for _, elapsed in measurements], dtype=float)
        op_means = {
            column: float(
                np.mean([getattr(outcome.ops, field) for outcome, _ in measurements])
            )
            for column, field in OP_COLUMNS
        }
        return BenchRow(
            algorithm=str(alg),
            n_bits=n_bits,
            e_mode=e_mode,
            samples=len(measurements),
            mean_iters=float(np.mean(iterations)),
            median_iters=float(np.median(iterations)),
            max_iters=int(np.max(iterations)),
            mean_ns=float(np.mean(timings)),
            failures=0,
            **op_means,
        )

    def run(self) -> BenchReport:
        rows = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            for alg in self.algs:
                measurements = list(
                    executor.map(lambda pair: self.measure(alg, pair), self.pairs)
                )
                rows.append(self.aggregate(alg, measurements))
                logger.info(
                    "benchmarked %s on %s pairs: mean iterations %.3f",
                    alg,
                    len(measurements),
                    rows[-1].mean_iters,
                )
        return BenchReport(rows=rows)


def run_benchmark(
    pairs: Sequence[ModPair],
    algs: Sequence[AlgorithmId],
    spec: Optional[WorkloadSpec] = None,
    repetitions: Optional[int] = None,
    workers: Optional[int] = None,
) -> BenchReport:
    return BenchmarkRunner(pairs, algs, spec, repetitions, workers).run()
