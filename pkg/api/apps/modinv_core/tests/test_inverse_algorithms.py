from django.test import SimpleTestCase

from api.apps.modinv_core.libs import inverse_algorithms
from api.apps.modinv_core.libs.arithmetic import make_pair


class RunningExampleTest(SimpleTestCase):
    """Every exact algorithm on (e=7, n=60) and two small pairs"""

    def setUp(self) -> None:
        self.pair = make_pair(7, 60)

    def test_all_algorithms_return_43(self):
        for name, inverse_function in inverse_algorithms.EXACT_ALGORITHMS.items():
            with self.subTest(algorithm=name):
                outcome = inverse_function(self.pair)
                self.assertEqual(43, outcome.d)
                self.assertEqual(5, outcome.k)

    def test_small_pairs(self):
        for name, inverse_function in inverse_algorithms.EXACT_ALGORITHMS.items():
            with self.subTest(algorithm=name):
                self.assertEqual(1, inverse_function(make_pair(1, 10)).d)
                self.assertEqual(7, inverse_function(make_pair(3, 10)).d)
                self.assertEqual(1, inverse_function(make_pair(1, 3)).d)

    def test_sequential_iterations_equal_d(self):
        self.assertEqual(43, inverse_algorithms.sequential_inverse(self.pair).iterations)
        self.assertEqual(1, inverse_algorithms.sequential_inverse(make_pair(1, 10)).iterations)
        self.assertEqual(7, inverse_algorithms.sequential_inverse(make_pair(3, 10)).iterations)

    def test_euclid_coefficient_sequence(self):
        rows = []
        outcome = inverse_algorithms.euclid_inverse(self.pair, recorder=rows.append)
        self.assertEqual([0, 1, -8, 9, -17], [row[2] for row in rows])
        self.assertEqual(4, outcome.iterations)
        self.assertEqual(4, outcome.ops.divisions)

    def test_euclid_single_division_for_unit(self):
        rows = []
        outcome = inverse_algorithms.euclid_inverse(make_pair(1, 10), recorder=rows.append)
        self.assertEqual(1, outcome.ops.divisions)
        self.assertEqual(10, rows[-1][4])

    def test_gordon_uses_no_multiplication_or_division(self):
        outcome = inverse_algorithms.gordon_inverse(self.pair)
        self.assertEqual(0, outcome.ops.multiplications)
        self.assertEqual(0, outcome.ops.divisions)
        self.assertGreater(outcome.ops.shifts, 0)

    def test_gordon_swaps_when_u_exceeds_g(self):
        # 100 - 56 leaves 44 > 7, so the next pass takes quotient 0
        rows = []
        outcome = inverse_algorithms.gordon_inverse(make_pair(7, 100), recorder=rows.append)
        self.assertEqual(43, outcome.d)
        self.assertIn(0, [row[5] for row in rows[1:]])

    def test_stein_uses_no_multiplication_or_division(self):
        outcome = inverse_algorithms.stein_inverse(self.pair)
        self.assertEqual(0, outcome.ops.multiplications)
        self.assertEqual(0, outcome.ops.divisions)

    def test_stein_keeps_bezout_invariant(self):
        rows = []
        inverse_algorithms.stein_inverse(self.pair, recorder=rows.append)
        for u1, u2, u3, v1, v2, v3, t1, t2, t3 in rows:
            self.assertEqual(u3, 7 * u1 + 60 * u2)
            self.assertEqual(v3, 7 * v1 + 60 * v2)
            self.assertEqual(t3, 7 * t1 + 60 * t2)
        self.assertEqual(0, rows[-1][8])

    def test_baghdad_iterations(self):
        self.assertEqual(5, inverse_algorithms.baghdad_inverse(self.pair).iterations)
        self.assertEqual(2, inverse_algorithms.baghdad_inverse(make_pair(3, 10)).iterations)

    def test_baghdad_unit_normalizes_n_plus_one(self):
        outcome = inverse_algorithms.baghdad_inverse(make_pair(1, 10))
        self.assertEqual(1, outcome.d)
        self.assertEqual(1, outcome.iterations)
        self.assertEqual(0, outcome.k)

    def test_ffim_exact_running_example(self):
        rows = []
        outcome = inverse_algorithms.ffim_exact_inverse(self.pair, recorder=rows.append)
        self.assertEqual(3, outcome.iterations)
        self.assertEqual(4, rows[-1][3])
        self.assertEqual(outcome.k - 1, rows[-1][3])

    def test_ffim_exact_solved_case(self):
        # (13 + 1) mod 7 = 0
        outcome = inverse_algorithms.ffim_exact_inverse(make_pair(7, 13))
        self.assertEqual(2, outcome.d)
        self.assertEqual(0, outcome.iterations)
        self.assertEqual(1, outcome.k)

    def test_ffim_exact_unit(self):
        outcome = inverse_algorithms.ffim_exact_inverse(make_pair(1, 10))
        self.assertEqual(1, outcome.d)
        self.assertEqual(0, outcome.iterations)

    def test_untraced_and_traced_runs_agree(self):
        for name, inverse_function in inverse_algorithms.EXACT_ALGORITHMS.items():
            with self.subTest(algorithm=name):
                rows = []
                self.assertEqual(
                    inverse_function(self.pair),
                    inverse_function(self.pair, recorder=rows.append),
                )
                self.assertEqual(
                    len(inverse_algorithms.TRACE_HEADERS[name]), len(rows[0])
                )
