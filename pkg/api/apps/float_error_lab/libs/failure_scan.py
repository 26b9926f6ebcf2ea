import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from api.apps.float_error_lab.models import (
    FailureReport,
    FloatProbeResult,
    Verdict,
    Witness,
)
from api.apps.modinv_core.models import ModPair
from api.includes import exceptions
from config.preferences import AppPreferences
from .float_inverse import probe

logger = logging.getLogger(__name__)

DECILES = 10
MAX_FLOAT_N_BITS = 52


class FailureScanner:
    """Probes a seeded sample of coprime (e, n) pairs on the float path

    Pairs are drawn per e with n uniform in [2^(n_bits - 1), 2^n_bits),
    coprime with e and larger than e. With e_count set, that many distinct e
    are drawn log-uniformly from [e_min, e_max] instead of taking every e.
    """

    def __init__(
        self,
        e_min: int,
        e_max: int,
        samples_per_e: int,
        n_bits: int,
        epsilon: float,
        seed: int,
        e_count: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        self.e_min = e_min
        self.e_max = e_max
        self.samples_per_e = samples_per_e
        self.n_bits = n_bits
        self.epsilon = epsilon
        self.seed = seed
        self.e_count = e_count
        preferences = AppPreferences()
        self.workers = workers or preferences.scan_workers
        self.max_attempts = preferences.workload_max_attempts
        self.witness_cap = preferences.witness_cap
        self.__validate()
        self.rng = random.Random(seed)

    def __validate(self):
        if not 3 <= self.e_min <= self.e_max:
            raise exceptions.DomainError(
                f"scan bounds need 3 <= e_min <= e_max, got [{self.e_min}, {self.e_max}]"
            )
        if self.samples_per_e < 1:
            raise exceptions.DomainError("samples_per_e must be at least 1")
        if not 2 <= self.n_bits <= MAX_FLOAT_N_BITS:
            raise exceptions.DomainError(
                f"n_bits must lie in [2, {MAX_FLOAT_N_BITS}], got {self.n_bits}"
            )
        if not self.epsilon > 0:
            raise exceptions.DomainError(f"epsilon must be positive, got {self.epsilon}")
        if self.e_count is not None and self.e_count < 1:
            raise exceptions.DomainError("e_count must be at least 1")
        if self.workers < 1:
            raise exceptions.DomainError("workers must be at least 1")

    def exponents(self) -> List[int]:
        span = self.e_max - self.e_min + 1
        if self.e_count is None or self.e_count >= span:
            return list(range(self.e_min, self.e_max + 1))

        low, high = math.log(self.e_min), math.log(self.e_max + 1)
        chosen = set()
        for _ in range(self.e_count * self.max_attempts):
            if len(chosen) == self.e_count:
                break
            e = int(math.exp(self.rng.uniform(low, high)))
            chosen.add(min(max(e, self.e_min), self.e_max))
        return sorted(chosen)

    def draw_modulus(self, e: int) -> Optional[int]:
        low, high = 2 ** (self.n_bits - 1), 2**self.n_bits
        if high - 1 <= e:
            return None
        for _ in range(self.max_attempts):
            n = self.rng.randrange(max(low, e + 1), high)
            if math.gcd(e, n) == 1:
                return n
        return None

    def sample_pairs(self) -> List[ModPair]:
        pairs = set()
        for e in self.exponents():
            for _ in range(self.samples_per_e):
                n = self.draw_modulus(e)
                if n is not None:
                    pairs.add((e, n))
        if not pairs:
            raise exceptions.DomainError(
                f"no coprime pair with e in [{self.e_min}, {self.e_max}] "
                f"and {self.n_bits}-bit n"
            )
        return [ModPair(e=e, n=n) for e, n in sorted(pairs)]

    def _probe(self, pair: ModPair) -> FloatProbeResult:
        return probe(pair, self.epsilon)

    def run(self) -> FailureReport:
        pairs = self.sample_pairs()
        logger.info(
            "float scan of %s pairs, e in [%s, %s], epsilon=%s",
            len(pairs),
            self.e_min,
            self.e_max,
            self.epsilon,
        )
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(self._probe, pairs))

        report = FailureReport(
            epsilon=self.epsilon,
            pairs=len(results),
            verdicts=self.count_verdicts(results),
            decile_mean_r_error=self.decile_means(results),
            witnesses=self.collect_witnesses(results),
        )
        logger.info("float scan finished with %s failures", report.failures)
        return report

    @staticmethod
    def count_verdicts(results: List[FloatProbeResult]) -> dict:
        counts = {verdict: 0 for verdict in Verdict}
        for result in results:
            counts[result.verdict] += 1
        return counts

    @staticmethod
    def decile_means(results: List[FloatProbeResult]) -> List[Optional[float]]:
        """Mean r_error per tenth of the results ordered by exact witness k"""
        ordered = sorted(results, key=lambda result: (result.k_exact, result.e, result.n))
        errors = np.array([result.r_error for result in ordered], dtype=float)
        return [
            float(np.mean(chunk)) if chunk.size else None
            for chunk in np.array_split(errors, DECILES)
        ]

    def collect_witnesses(self, results: List[FloatProbeResult]) -> List[Witness]:
        failed = [result for result in results if not result.agrees]
        failed.sort(key=lambda result: (result.e, result.n))
        return [
            Witness(e=result.e, n=result.n, k=result.k_exact, verdict=result.verdict)
            for result in failed[: self.witness_cap]
        ]


def scan_failures(
    e_min: int,
    e_max: int,
    samples_per_e: int,
    n_bits: int,
    epsilon: float,
    seed: int,
    e_count: Optional[int] = None,
    workers: Optional[int] = None,
) -> FailureReport:
    scanner = FailureScanner(
        e_min, e_max, samples_per_e, n_bits, epsilon, seed, e_count, workers
    )
    return scanner.run()
