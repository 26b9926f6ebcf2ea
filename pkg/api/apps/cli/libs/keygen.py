import logging
import math

from api.apps.cli.models import ToyKeyPair
from api.apps.modinv_core.libs.arithmetic import gcd, make_pair
from api.apps.modinv_core.libs.inverse_algorithms import euclid_inverse
from api.includes import exceptions
from config.preferences import AppPreferences

logger = logging.getLogger(__name__)

DEMO_WARNING = (
    "toy key generation for demonstration only: tiny trial-division primes, "
    "no padding, not secure"
)


def is_prime(value: int) -> bool:
    """Trial division, fine below 2^32"""
    if value < 2:
        return False
    if value % 2 == 0:
        return value == 2
    for divisor in range(3, math.isqrt(value) + 1, 2):
        if value % divisor == 0:
            return False
    return True


def rsa_toy_keygen(p: int, q: int, e: int) -> ToyKeyPair:
    """Builds n = p * q and d = e^-1 mod (p - 1)(q - 1) with euclid_inverse

    Raises:
        DomainError: p or q not prime, equal, or beyond keygen_prime_limit
        NoInverse: e shares a divisor with the totient, a multiple of it included
    """
    limit = AppPreferences().keygen_prime_limit
    for name, value in (("p", p), ("q", q)):
        if not 2 <= value < limit:
            raise exceptions.DomainError(f"{name}={value} must lie in [2, {limit})")
        if not is_prime(value):
            raise exceptions.DomainError(f"{name}={value} is not prime")
    if p == q:
        raise exceptions.DomainError("p and q must be distinct primes")

    totient = (p - 1) * (q - 1)
    divisor = gcd(e, totient)
    if divisor != 1:
        raise exceptions.NoInverse(divisor)
    d = euclid_inverse(make_pair(e, totient)).d
    logger.warning(DEMO_WARNING)
    return ToyKeyPair(p=p, q=q, n=p * q, totient=totient, e=e, d=d)
