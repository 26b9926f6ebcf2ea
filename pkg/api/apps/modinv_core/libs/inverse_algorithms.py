"""Exact-arithmetic multiplicative inverse algorithms.

Every function takes a validated ModPair and an optional row recorder. The
recorder receives one tuple per trace row, in the column order given by
TRACE_HEADERS; passing it never changes the result. Operation counts cover
the main loop of each algorithm only.

Working variables held per algorithm, loop indices and counters excluded:
euclid 8 (e, n, g, u, i, v, q, t), stein 11 (e, n and three triples),
gordon 9 (euclid with s, p in place of q), baghdad 5 (e, n, k, numerator,
quotient) and ffim_exact 6 (e, n, a, b, i, numerator). sequential keeps
e, n, d and the residue.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple

from api.apps.modinv_core.models import InverseOutcome, ModPair, OpCounts
from api.includes import exceptions
from .arithmetic import verify_inverse

logger = logging.getLogger(__name__)

RowRecorder = Optional[Callable[[Sequence], None]]
InverseFunction = Callable[..., InverseOutcome]

TRACE_HEADERS: Dict[str, Tuple[str, ...]] = {
    "sequential": ("d", "product_mod_n"),
    "euclid": ("g", "u", "i", "v", "q", "t"),
    "stein": ("u1", "u2", "u3", "v1", "v2", "v3", "t1", "t2", "t3"),
    "gordon": ("g", "u", "i", "v", "s", "p", "t"),
    "baghdad": ("k", "numerator", "quotient", "result"),
    "ffim_exact": ("i", "s_f", "d_f", "r"),
}

# algorithms whose trace opens with an initialisation row
TRACE_INIT_ROW = frozenset({"euclid", "stein", "gordon"})


def _build_outcome(
    algorithm: str, pair: ModPair, d: int, iterations: int, **counts
) -> InverseOutcome:
    d = d % pair.n
    if not verify_inverse(pair, d):
        logger.error("%s produced d=%s for %s", algorithm, d, pair)
        raise exceptions.InternalConsistencyError(
            f"{algorithm} produced a non-inverse d={d} for {pair}"
        )
    return InverseOutcome(
        d=d,
        k=(pair.e * d - 1) // pair.n,
        iterations=iterations,
        ops=OpCounts(**counts),
    )


def sequential_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Tests d = 1, 2, ... until e * d mod n = 1; iterations = d"""
    e, n = pair.e, pair.n
    additions = multiplications = divisions = comparisons = 0
    d = 1
    while d < n:
        residue = (e * d) % n
        multiplications += 1
        divisions += 1
        comparisons += 1
        if recorder is not None:
            recorder((d, residue))
        if residue == 1:
            return _build_outcome(
                "sequential",
                pair,
                d,
                d,
                additions=additions,
                multiplications=multiplications,
                divisions=divisions,
                comparisons=comparisons,
            )
        d += 1
        additions += 1
    raise exceptions.InternalConsistencyError(
        f"sequential search exhausted n - 1 candidates for {pair}"
    )


def euclid_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Extended Euclid: g <- n; u <- e; i <- 0; v <- 1, one division per pass"""
    e, n = pair.e, pair.n
    subtractions = multiplications = divisions = comparisons = 0
    iterations = 0
    g, u, i, v = n, e, 0, 1
    if recorder is not None:
        recorder((g, u, i, v, 0, 0))
    while True:
        comparisons += 1
        if not u > 0:
            break
        q = g // u
        t = g - q * u
        g, u = u, t
        i, v = v, i - q * v
        divisions += 1
        multiplications += 2
        subtractions += 2
        iterations += 1
        if recorder is not None:
            recorder((g, u, i, v, q, t))
    if i < 0:
        i = n + i
    return _build_outcome(
        "euclid",
        pair,
        i,
        iterations,
        subtractions=subtractions,
        multiplications=multiplications,
        divisions=divisions,
        comparisons=comparisons,
    )


def stein_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Binary extended gcd on (u1, u2, u3), (v1, v2, v3), (t1, t2, t3).

    Invariant: e * x1 + n * x2 = x3 for each of the three triples. Only
    halving (shift), addition, subtraction and comparison are used. The
    common-power-of-two stripping step is a no-op since gcd(e, n) = 1.
    """
    e, n = pair.e, pair.n
    additions = subtractions = shifts = comparisons = 0
    iterations = 0

    u1, u2, u3 = 1, 0, e
    v1, v2, v3 = n, 1 - e, n
    comparisons += 1
    if e & 1:
        t1, t2, t3 = 0, -1, -n
    else:
        t1, t2, t3 = 1, 0, e
    if recorder is not None:
        recorder((u1, u2, u3, v1, v2, v3, t1, t2, t3))

    while True:
        while True:
            comparisons += 1
            if t3 & 1:
                break
            comparisons += 1
            if not t1 & 1 and not t2 & 1:
                t1, t2 = t1 >> 1, t2 >> 1
            else:
                t1, t2 = (t1 + n) >> 1, (t2 - e) >> 1
                additions += 1
                subtractions += 1
            t3 >>= 1
            shifts += 3

        comparisons += 1
        if t3 > 0:
            u1, u2, u3 = t1, t2, t3
        else:
            v1, v2, v3 = n - t1, -(e + t2), -t3
            additions += 1
            subtractions += 3

        t1, t2, t3 = u1 - v1, u2 - v2, u3 - v3
        subtractions += 3
        comparisons += 1
        if t1 < 0:
            t1, t2 = t1 + n, t2 - e
            additions += 1
            subtractions += 1

        iterations += 1
        if recorder is not None:
            recorder((u1, u2, u3, v1, v2, v3, t1, t2, t3))
        comparisons += 1
        if t3 == 0:
            break

    return _build_outcome(
        "stein",
        pair,
        u1,
        iterations,
        additions=additions,
        subtractions=subtractions,
        shifts=shifts,
        comparisons=comparisons,
    )


def gordon_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Euclid with each quotient replaced by the largest 2^s with 2^s * u <= g.

    The power of two is found by left-shifting u past g and backing off by one
    right shift; no multiplication or division runs inside the loop. When
    u > g the pass uses quotient 0 (p = 0), which swaps the two rows.
    """
    e, n = pair.e, pair.n
    additions = subtractions = shifts = comparisons = 0
    iterations = 0

    g, u, i, v = n, e, 0, 1
    if recorder is not None:
        recorder((g, u, i, v, 0, 0, 0))

    while True:
        comparisons += 1
        if u == 0:
            break
        s, p = -1, 0
        comparisons += 1
        if u > g:
            g, u = u, g
            i, v = v, i
        else:
            p = 1
            t = u
            while True:
                comparisons += 1
                if not t <= g:
                    break
                s += 1
                t <<= 1
                additions += 1
                shifts += 1
            t >>= 1
            shifts += 1
            g, u = u, g - t
            i, v = v, i - (v << s)
            subtractions += 2
            shifts += 1
        iterations += 1
        if recorder is not None:
            recorder((g, u, i, v, s, p, u))

    if i < 0:
        i = n + i
    return _build_outcome(
        "gordon",
        pair,
        i,
        iterations,
        additions=additions,
        subtractions=subtractions,
        shifts=shifts,
        comparisons=comparisons,
    )


def baghdad_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Repeats d = (d + n) / e until d is an integer.

    Kept exact: the numerator 1 + k * n is accumulated and tested for
    divisibility by e. Pass k tests 1 + k * n, so for e > 1 the number of
    passes equals the witness k. Capped at e passes since k < e.
    """
    e, n = pair.e, pair.n
    additions = divisions = comparisons = 0
    numerator = 1
    for k in range(1, e + 1):
        numerator += n
        quotient, remainder = divmod(numerator, e)
        additions += 1
        divisions += 1
        comparisons += 1
        if recorder is not None:
            recorder(
                (
                    k,
                    numerator,
                    Fraction(numerator, e),
                    "integer" if remainder == 0 else "not integer",
                )
            )
        if remainder == 0:
            return _build_outcome(
                "baghdad",
                pair,
                quotient,
                k,
                additions=additions,
                divisions=divisions,
                comparisons=comparisons,
            )
    raise exceptions.InternalConsistencyError(
        f"baghdad exhausted its cap of e={e} passes for {pair}"
    )


def ffim_exact_inverse(pair: ModPair, recorder: RowRecorder = None) -> InverseOutcome:
    """Fraction-integer method on integer numerators.

    With a = (n + 1) mod e and b = n mod e, r = (i - a/e) / (b/e) is
    (i * e - a) / b; the first i >= 1 making it an integer gives
    d = (n * (r + 1) + 1) / e and r = k - 1. a = 0 is the solved case
    d = (n + 1) / e. Capped at e tried indices.
    """
    e, n = pair.e, pair.n
    if e == 1:
        return _build_outcome("ffim_exact", pair, 1, 0)

    a = (n + 1) % e
    b = n % e
    if a == 0:
        return _build_outcome("ffim_exact", pair, (n + 1) // e, 0)

    s_f = d_f = None
    if recorder is not None:
        s_f, d_f = Fraction(a, e), Fraction(b, e)

    additions = divisions = comparisons = 0
    numerator = -a
    for i in range(1, e + 1):
        numerator += e
        r, remainder = divmod(numerator, b)
        additions += 1
        divisions += 1
        comparisons += 1
        if recorder is not None:
            recorder((i, s_f, d_f, Fraction(numerator, b)))
        if remainder == 0:
            d = (n * (r + 1) + 1) // e
            return _build_outcome(
                "ffim_exact",
                pair,
                d,
                i,
                additions=additions,
                divisions=divisions,
                comparisons=comparisons,
            )
    raise exceptions.InternalConsistencyError(
        f"ffim_exact exhausted its cap of e={e} indices for {pair}"
    )


EXACT_ALGORITHMS: Dict[str, InverseFunction] = {
    "sequential": sequential_inverse,
    "euclid": euclid_inverse,
    "stein": stein_inverse,
    "gordon": gordon_inverse,
    "baghdad": baghdad_inverse,
    "ffim_exact": ffim_exact_inverse,
}
