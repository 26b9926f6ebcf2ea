import json
from fractions import Fraction
from unittest import mock

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from api.apps.instrumentation.libs.trace_renderer import render_trace
from api.apps.instrumentation.libs.tracing import (
    LINEAR_TRACES,
    expected_rows,
    knuth_expected_divisions,
    traced_inverse,
)
from api.apps.instrumentation.models import AlgorithmId, TraceFormat
from api.apps.modinv_core.libs import inverse_algorithms
from api.apps.modinv_core.libs.arithmetic import make_pair
from api.includes import exceptions


def sequential_step(pair, row):
    d = int(row[0]) + 1
    return [d, pair.e * d % pair.n]


def euclid_step(pair, row):
    g, u, i, v = (int(cell) for cell in row[:4])
    q = g // u
    t = g - q * u
    return [u, t, v, i - q * v, q, t]


def stein_step(pair, row):
    e, n = pair.e, pair.n
    u1, u2, u3, v1, v2, v3, t1, t2, t3 = (int(cell) for cell in row)
    while not t3 & 1:
        if not t1 & 1 and not t2 & 1:
            t1, t2 = t1 >> 1, t2 >> 1
        else:
            t1, t2 = (t1 + n) >> 1, (t2 - e) >> 1
        t3 >>= 1
    if t3 > 0:
        u1, u2, u3 = t1, t2, t3
    else:
        v1, v2, v3 = n - t1, -(e + t2), -t3
    t1, t2, t3 = u1 - v1, u2 - v2, u3 - v3
    if t1 < 0:
        t1, t2 = t1 + n, t2 - e
    return [u1, u2, u3, v1, v2, v3, t1, t2, t3]


def gordon_step(pair, row):
    g, u, i, v = (int(cell) for cell in row[:4])
    if u > g:
        return [u, g, v, i, -1, 0, g]
    s = (g // u).bit_length() - 1
    return [u, g - (u << s), v, i - (v << s), s, 1, g - (u << s)]


def baghdad_step(pair, row):
    numerator = int(row[1]) + pair.n
    result = "integer" if numerator % pair.e == 0 else "not integer"
    return [int(row[0]) + 1, numerator, Fraction(numerator, pair.e), result]


def ffim_exact_step(pair, row):
    i = int(row[0]) + 1
    a, b = (pair.n + 1) % pair.e, pair.n % pair.e
    return [i, Fraction(row[1]), Fraction(row[2]), Fraction(i * pair.e - a, b)]


TRACE_STEPS = {
    AlgorithmId.SEQUENTIAL: sequential_step,
    AlgorithmId.EUCLID: euclid_step,
    AlgorithmId.STEIN: stein_step,
    AlgorithmId.GORDON: gordon_step,
    AlgorithmId.BAGHDAD: baghdad_step,
    AlgorithmId.FFIM_EXACT: ffim_exact_step,
}


def first_row(alg, pair):
    e, n = pair.e, pair.n
    if alg == AlgorithmId.SEQUENTIAL:
        return [1, e % n]
    if alg == AlgorithmId.EUCLID:
        return [n, e, 0, 1, 0, 0]
    if alg == AlgorithmId.STEIN:
        t = (0, -1, -n) if e & 1 else (1, 0, e)
        return [1, 0, e, n, 1 - e, n, *t]
    if alg == AlgorithmId.GORDON:
        return [n, e, 0, 1, 0, 0, 0]
    if alg == AlgorithmId.BAGHDAD:
        result = "integer" if (1 + n) % e == 0 else "not integer"
        return [1, 1 + n, Fraction(1 + n, e), result]
    a, b = (n + 1) % e, n % e
    return [1, Fraction(a, e), Fraction(b, e), Fraction(e - a, b)]


class TraceReplayTest(SimpleTestCase):
    """Each recorded row follows from the row before it"""

    def assert_replays(self, alg, pair):
        _, trace = traced_inverse(alg, pair)
        if not trace.rows:
            return
        self.assertEqual(
            [str(value) for value in first_row(alg, pair)], trace.rows[0]
        )
        step = TRACE_STEPS[alg]
        for previous, current in zip(trace.rows, trace.rows[1:]):
            self.assertEqual([str(value) for value in step(pair, previous)], current)

    def test_worked_pair(self):
        for alg in AlgorithmId.exact_algorithms():
            with self.subTest(algorithm=alg):
                self.assert_replays(alg, make_pair(7, 60))

    def test_gordon_swap_row(self):
        _, trace = traced_inverse(AlgorithmId.GORDON, make_pair(7, 40))
        self.assertIn(["-1", "0"], [row[4:6] for row in trace.rows])
        self.assert_replays(AlgorithmId.GORDON, make_pair(7, 40))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=2000), st.data())
    def test_rows_replay_from_their_predecessor(self, n, data):
        e = data.draw(st.integers(min_value=1, max_value=n - 1))
        try:
            pair = make_pair(e, n)
        except exceptions.NoInverse:
            return
        for alg in AlgorithmId.exact_algorithms():
            self.assert_replays(alg, pair)


class TracedInverseTest(SimpleTestCase):
    def setUp(self) -> None:
        self.pair = make_pair(7, 60)

    def test_euclid_trace(self):
        outcome, trace = traced_inverse(AlgorithmId.EUCLID, self.pair)
        self.assertEqual(43, outcome.d)
        self.assertTrue(trace.has_init_row)
        self.assertEqual(outcome.iterations + 1, len(trace.rows))
        self.assertEqual(["0", "1", "-8", "9", "-17"], trace.column("i"))
        self.assertEqual("0", trace.rows[-1][1])

    def test_baghdad_trace(self):
        outcome, trace = traced_inverse(AlgorithmId.BAGHDAD, self.pair)
        self.assertEqual(["1", "2", "3", "4", "5"], trace.column("k"))
        self.assertEqual(["61", "121", "181", "241", "301"], trace.column("numerator"))
        self.assertEqual("61/7", trace.rows[0][2])
        self.assertEqual(["5", "301", "43", "integer"], trace.rows[-1])
        self.assertEqual(outcome.iterations, len(trace.rows))

    def test_ffim_exact_trace(self):
        _, trace = traced_inverse(AlgorithmId.FFIM_EXACT, self.pair)
        self.assertEqual(
            [
                ["1", "5/7", "4/7", "1/2"],
                ["2", "5/7", "4/7", "9/4"],
                ["3", "5/7", "4/7", "4"],
            ],
            trace.rows,
        )

    def test_ffim_exact_solved_case_has_no_rows(self):
        outcome, trace = traced_inverse(AlgorithmId.FFIM_EXACT, make_pair(7, 13))
        self.assertEqual(2, outcome.d)
        self.assertEqual([], trace.rows)

    def test_sequential_trace_ends_on_unit_residue(self):
        outcome, trace = traced_inverse("sequential", self.pair)
        self.assertEqual(43, len(trace.rows))
        self.assertEqual(["43", "1"], trace.rows[-1])
        self.assertEqual(outcome.iterations, len(trace.rows))

    def test_gordon_and_stein_row_counts(self):
        for alg in (AlgorithmId.GORDON, AlgorithmId.STEIN):
            with self.subTest(algorithm=alg):
                outcome, trace = traced_inverse(alg, self.pair)
                self.assertEqual(outcome.iterations + 1, len(trace.rows))
                for row in trace.rows:
                    self.assertEqual(len(trace.headers), len(row))

    def test_row_limit(self):
        with self.assertRaises(exceptions.TraceLimitExceeded):
            traced_inverse(AlgorithmId.SEQUENTIAL, self.pair, max_rows=10)
        _, trace = traced_inverse(AlgorithmId.SEQUENTIAL, self.pair, max_rows=43)
        self.assertEqual(43, len(trace.rows))

    def test_long_trace_refused_before_running(self):
        pair = make_pair(2000003, 2**40 + 15)
        rows_needed = expected_rows(AlgorithmId.BAGHDAD, pair)
        self.assertEqual(inverse_algorithms.euclid_inverse(pair).k, rows_needed)
        self.assertGreater(rows_needed, 1_000_000)
        for alg in LINEAR_TRACES:
            with self.subTest(algorithm=alg):
                run = mock.Mock()
                with mock.patch.dict(
                    inverse_algorithms.EXACT_ALGORITHMS, {alg.value: run}
                ):
                    with self.assertRaises(exceptions.TraceLimitExceeded):
                        traced_inverse(alg, pair, max_rows=1_000_000)
                run.assert_not_called()

    def test_logarithmic_traces_have_no_prediction(self):
        for alg in (AlgorithmId.EUCLID, AlgorithmId.STEIN, AlgorithmId.GORDON):
            with self.subTest(algorithm=alg):
                self.assertIsNone(expected_rows(alg, self.pair))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=2000), st.data())
    def test_predicted_rows_match_recorded_rows(self, n, data):
        e = data.draw(st.integers(min_value=1, max_value=n - 1))
        try:
            pair = make_pair(e, n)
        except exceptions.NoInverse:
            return
        for alg in LINEAR_TRACES:
            _, trace = traced_inverse(alg, pair)
            self.assertEqual(len(trace.rows), expected_rows(alg, pair))
            traced_inverse(alg, pair, max_rows=len(trace.rows))

    def test_float_variant_is_rejected(self):
        with self.assertRaises(exceptions.DomainError):
            traced_inverse(AlgorithmId.FFIM_FLOAT, self.pair)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=2, max_value=2000), st.data())
    def test_trace_replay_matches_untraced_run(self, n, data):
        e = data.draw(st.integers(min_value=1, max_value=n - 1))
        try:
            pair = make_pair(e, n)
        except exceptions.NoInverse:
            return
        for alg in AlgorithmId.exact_algorithms():
            outcome, trace = traced_inverse(alg, pair)
            self.assertEqual(
                inverse_algorithms.EXACT_ALGORITHMS[alg.value](pair), outcome
            )
            expected_rows = outcome.iterations + (1 if trace.has_init_row else 0)
            self.assertEqual(expected_rows, len(trace.rows))


class TraceRendererTest(SimpleTestCase):
    def setUp(self) -> None:
        _, self.trace = traced_inverse(AlgorithmId.BAGHDAD, make_pair(7, 60))

    def test_table(self):
        lines = render_trace(self.trace, TraceFormat.TABLE).splitlines()
        self.assertEqual(6, len(lines))
        self.assertEqual(["k", "numerator", "quotient", "result"], lines[0].split())
        self.assertEqual(["5", "301", "43", "integer"], lines[-1].split())

    def test_json(self):
        document = json.loads(render_trace(self.trace, TraceFormat.JSON))
        self.assertEqual("baghdad", document["algorithm"])
        self.assertEqual("43", document["d"])
        self.assertEqual("5", document["k"])
        self.assertEqual(5, document["iterations"])
        self.assertEqual(self.trace.rows, document["rows"])

    def test_empty_table_is_header_line(self):
        _, trace = traced_inverse(AlgorithmId.FFIM_EXACT, make_pair(7, 13))
        self.assertEqual("i s_f d_f r", render_trace(trace))


class KnuthExpectationTest(SimpleTestCase):
    def test_reference_values(self):
        self.assertAlmostEqual(2.313, knuth_expected_divisions(2), places=9)
        self.assertAlmostEqual(18.33, knuth_expected_divisions(2**20), places=9)
        self.assertAlmostEqual(28.446, knuth_expected_divisions(2**32), places=9)

    def test_natural_log_reading(self):
        self.assertAlmostEqual(
            0.843 * 32 * 0.6931471805599453 + 1.47,
            knuth_expected_divisions(2**32, natural_log=True),
            places=9,
        )
        self.assertLess(
            knuth_expected_divisions(2**32, natural_log=True),
            knuth_expected_divisions(2**32),
        )

    def test_rejects_small_n(self):
        for n in (1, 0, -5):
            with self.assertRaises(exceptions.DomainError):
                knuth_expected_divisions(n)
