from api.apps.modinv_core.models import ModPair
from api.includes import exceptions


def _require_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise exceptions.DomainError(f"{name} must be an integer, got {value!r}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers

    Raises:
        DomainError: when both inputs are zero or either is negative
    """
    a, b = _require_int("a", a), _require_int("b", b)
    if a < 0 or b < 0:
        raise exceptions.DomainError("gcd is defined here for nonnegative inputs")
    if a == 0 and b == 0:
        raise exceptions.DomainError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


def make_pair(e_raw: int, n: int) -> ModPair:
    """Builds a ModPair, reducing e modulo n

    Raises:
        DomainError: n < 2 or e_raw is a multiple of n
        NoInverse: e and n share a divisor greater than 1
    """
    e_raw, n = _require_int("e", e_raw), _require_int("n", n)
    if n < 2:
        raise exceptions.DomainError(f"modulus must be at least 2, got n={n}")
    e = e_raw % n
    if e == 0:
        raise exceptions.DomainError(f"e={e_raw} is a multiple of n={n}")
    divisor = gcd(e, n)
    if divisor != 1:
        raise exceptions.NoInverse(divisor)
    return ModPair(e=e, n=n)


def verify_inverse(pair: ModPair, d: int) -> bool:
    if isinstance(d, bool) or not isinstance(d, int):
        return False
    return 1 <= d < pair.n and (pair.e * d) % pair.n == 1


def witness_k(pair: ModPair, d: int) -> int:
    """Returns k with e * d = 1 + k * n

    Raises:
        DomainError: d is not the inverse of e modulo n
    """
    if not verify_inverse(pair, d):
        raise exceptions.DomainError(f"d={d} is not the inverse of {pair}")
    return (pair.e * d - 1) // pair.n
