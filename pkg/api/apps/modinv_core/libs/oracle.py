import logging
from typing import Iterator, Optional

from api.apps.modinv_core.models import Discrepancy, ModPair, ValidationSummary
from api.includes import exceptions
from .arithmetic import gcd
from .inverse_algorithms import EXACT_ALGORITHMS, sequential_inverse

logger = logging.getLogger(__name__)


def iter_coprime_pairs(n_max: int, n_min: int = 2) -> Iterator[ModPair]:
    """Yields every coprime (e, n) with n_min <= n <= n_max, ordered by (n, e)"""
    for n in range(max(n_min, 2), n_max + 1):
        for e in range(1, n):
            if gcd(e, n) == 1:
                yield ModPair(e=e, n=n)


def _check_pair(pair: ModPair) -> Optional[Discrepancy]:
    expected = sequential_inverse(pair).d
    for name, inverse_function in EXACT_ALGORITHMS.items():
        if name == "sequential":
            continue
        try:
            actual = inverse_function(pair).d
        except exceptions.InternalConsistencyError as e:
            return Discrepancy(
                algorithm=name, e=pair.e, n=pair.n, expected=expected, error=str(e)
            )
        if actual != expected:
            return Discrepancy(
                algorithm=name, e=pair.e, n=pair.n, expected=expected, actual=actual
            )
    return None


def cross_validate(n_max: int) -> ValidationSummary:
    """Checks every exact algorithm against the sequential search for all
    coprime pairs with n <= n_max, stopping at the first discrepancy
    """
    if n_max < 2:
        raise exceptions.DomainError(f"n_max must be at least 2, got {n_max}")

    pairs_checked = 0
    discrepancy = None
    for pair in iter_coprime_pairs(n_max):
        pairs_checked += 1
        discrepancy = _check_pair(pair)
        if discrepancy is not None:
            logger.error(str(discrepancy))
            break

    logger.info("cross validation up to n=%s checked %s pairs", n_max, pairs_checked)
    return ValidationSummary(
        n_max=n_max,
        pairs_checked=pairs_checked,
        algorithms=list(EXACT_ALGORITHMS),
        discrepancy=discrepancy,
    )
