import logging
import math
import random
from typing import List, Optional

from api.apps.benchmark.models import EMode, WorkloadSpec
from api.apps.modinv_core.models import ModPair
from api.includes import exceptions
from config.preferences import AppPreferences

logger = logging.getLogger(__name__)


class WorkloadGenerator:
    """Draws `samples` coprime pairs from a seeded generator

    n is uniform in [2^(n_bits - 1), 2^n_bits) unless pinned by n_fixed.
    A draw whose e cannot pair with n is thrown away and redrawn, at most
    workload_max_attempts times per sample.
    """

    def __init__(self, spec: WorkloadSpec):
        self.spec = spec
        self.rng = random.Random(spec.seed)
        self.max_attempts = AppPreferences().workload_max_attempts

    def draw_modulus(self) -> int:
        if self.spec.n_fixed is not None:
            return self.spec.n_fixed
        low = 2 ** (self.spec.n_bits - 1)
        return self.rng.randrange(low, 2 * low)

    def draw_exponent(self, n: int) -> Optional[int]:
        if self.spec.e_mode == EMode.FIXED_LIST:
            e = self.rng.choice(self.spec.e_fixed)
            return e if e < n and math.gcd(e, n) == 1 else None
        if n < 3:
            return None
        e = self.rng.randrange(2, n)
        return e if math.gcd(e, n) == 1 else None

    def draw_pair(self) -> ModPair:
        for _ in range(self.max_attempts):
            n = self.draw_modulus()
            e = self.draw_exponent(n)
            if e is not None:
                return ModPair(e=e, n=n)
        raise exceptions.GenerationError(
            f"no coprime pair for {self.spec.e_mode_label} with "
            f"{self.spec.n_bits}-bit n after {self.max_attempts} attempts"
        )

    def generate(self) -> List[ModPair]:
        pairs = [self.draw_pair() for _ in range(self.spec.samples)]
        logger.info(
            "generated %s pairs, n_bits=%s e_mode=%s seed=%s",
            len(pairs),
            self.spec.n_bits,
            self.spec.e_mode_label,
            self.spec.seed,
        )
        return pairs


def generate_workload(spec: WorkloadSpec) -> List[ModPair]:
    return WorkloadGenerator(spec).generate()
