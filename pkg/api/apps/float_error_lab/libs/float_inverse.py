"""Fraction-integer method evaluated in 64-bit binary floating point.

s_f, d_f and r are Python floats (IEEE 754 binary64, round-half-even), so
every division below rounds once. The terminating candidate is confirmed by
an exact divisibility test before any inverse is returned.
"""
import logging
from fractions import Fraction
from typing import Tuple

from api.apps.float_error_lab.models import FloatProbeResult, UlpGap, Verdict
from api.apps.modinv_core.libs.arithmetic import verify_inverse, witness_k
from api.apps.modinv_core.libs.inverse_algorithms import ffim_exact_inverse
from api.apps.modinv_core.models import InverseOutcome, ModPair, OpCounts
from api.includes import exceptions

logger = logging.getLogger(__name__)

# largest modulus a binary64 float holds without rounding, exclusive
FLOAT_EXACT_LIMIT = 2**53


def _check_float_domain(pair: ModPair):
    if pair.n >= FLOAT_EXACT_LIMIT:
        raise exceptions.DomainError(
            f"n={pair.n} is not exactly representable as a 64-bit float (n >= 2^53)"
        )


def _check_epsilon(epsilon: float):
    if not epsilon > 0:
        raise exceptions.DomainError(f"epsilon must be positive, got {epsilon}")


def float_terms(pair: ModPair) -> Tuple[int, int, float, float]:
    """Returns a = (n + 1) mod e, b = n mod e and their float quotients by e"""
    _check_float_domain(pair)
    a = (pair.n + 1) % pair.e
    b = pair.n % pair.e
    return a, b, a / pair.e, b / pair.e


def float_r(i: int, s_f: float, d_f: float) -> float:
    return (i - s_f) / d_f


def integrality_error(value: float) -> float:
    return abs(value - round(value))


def ffim_float_inverse(pair: ModPair, epsilon: float) -> InverseOutcome:
    """Runs r = (i - s_f) / d_f in floats until |r - round(r)| <= epsilon

    Returns:
        InverseOutcome: iterations is the index i at which the loop stopped

    Raises:
        DomainError: n >= 2^53 or epsilon <= 0
        FloatPathFailure: no index within the cap of e passed the tolerance
            (missed_termination), or the rounded r failed the exact
            divisibility check (wrong_answer)
    """
    _check_epsilon(epsilon)
    a, b, s_f, d_f = float_terms(pair)
    e, n = pair.e, pair.n

    if e == 1:
        return InverseOutcome(d=1, k=0, iterations=0)
    if a == 0:
        d = (n + 1) // e
        return InverseOutcome(d=d, k=witness_k(pair, d), iterations=0)

    additions = subtractions = divisions = comparisons = 0
    for i in range(1, e + 1):
        r = float_r(i, s_f, d_f)
        subtractions += 2
        divisions += 1
        comparisons += 1
        if integrality_error(r) > epsilon:
            additions += 1
            continue

        r_rounded = round(r)
        numerator = n * (r_rounded + 1) + 1
        if r_rounded < 0 or numerator % e != 0:
            logger.debug(
                "float path on %s stopped at i=%s with r=%r, not a witness", pair, i, r
            )
            raise exceptions.FloatPathFailure(
                Verdict.WRONG_ANSWER.value,
                i,
                f"float r={r!r} at i={i} gives no integer d for {pair}",
            )
        d = (numerator // e) % n
        if not verify_inverse(pair, d):
            raise exceptions.InternalConsistencyError(
                f"divisible candidate d={d} is not an inverse for {pair}"
            )
        return InverseOutcome(
            d=d,
            k=witness_k(pair, d),
            iterations=i,
            ops=OpCounts(
                additions=additions,
                subtractions=subtractions,
                divisions=divisions,
                comparisons=comparisons,
            ),
        )

    logger.debug("float path on %s never met epsilon=%s", pair, epsilon)
    raise exceptions.FloatPathFailure(
        Verdict.MISSED_TERMINATION.value,
        e,
        f"float r never came within {epsilon} of an integer in {e} passes for {pair}",
    )


def ulp_gap(pair: ModPair) -> UlpGap:
    _check_float_domain(pair)
    e, n = pair.e, pair.n
    return UlpGap(
        xi1=abs(Fraction(1 / e) - Fraction(1, e)),
        xi2=abs(Fraction(n / e) - Fraction(n, e)),
    )


def probe(pair: ModPair, epsilon: float) -> FloatProbeResult:
    """Runs the exact and float fraction-integer methods side by side"""
    _check_epsilon(epsilon)
    _, _, s_f, d_f = float_terms(pair)
    exact = ffim_exact_inverse(pair)
    i_exact = exact.iterations

    r_error = 0.0
    if i_exact > 0:
        r_error = integrality_error(float_r(i_exact, s_f, d_f))

    i_float = d_float = None
    try:
        outcome = ffim_float_inverse(pair, epsilon)
    except exceptions.FloatPathFailure as failure:
        verdict = Verdict(failure.verdict)
        if verdict == Verdict.WRONG_ANSWER:
            i_float = failure.index
    else:
        i_float, d_float = outcome.iterations, outcome.d
        if d_float != exact.d:
            verdict = Verdict.WRONG_ANSWER
        elif i_float < i_exact:
            verdict = Verdict.EARLY_TERMINATION
        elif i_float > i_exact:
            verdict = Verdict.MISSED_TERMINATION
        else:
            verdict = Verdict.AGREE

    return FloatProbeResult(
        e=pair.e,
        n=pair.n,
        epsilon=epsilon,
        k_exact=exact.k,
        i_exact=i_exact,
        d_exact=exact.d,
        i_float=i_float,
        d_float=d_float,
        r_error=r_error,
        verdict=verdict,
    )
