from typing import List

import numpy as np
from django.core.management.base import BaseCommand, CommandError, CommandParser

from api.apps.benchmark.libs.report_emitter import emit_report
from api.apps.benchmark.libs.runner import run_benchmark
from api.apps.benchmark.libs.workload import generate_workload
from api.apps.benchmark.models import ReportFormat, SMALL_E_PRESET, WorkloadSpec
from api.apps.cli.libs.keygen import DEMO_WARNING, rsa_toy_keygen
from api.apps.float_error_lab.libs.failure_scan import scan_failures
from api.apps.float_error_lab.libs.float_inverse import ffim_float_inverse
from api.apps.instrumentation.libs.trace_renderer import render_trace
from api.apps.instrumentation.libs.tracing import (
    knuth_expected_divisions,
    traced_inverse,
)
from api.apps.instrumentation.models import AlgorithmId, TraceFormat
from api.apps.modinv_core.libs.arithmetic import make_pair
from api.apps.modinv_core.libs.inverse_algorithms import EXACT_ALGORITHMS
from api.apps.modinv_core.libs.oracle import cross_validate
from api.includes import exceptions, utils
from api.includes.file_utils import FileUtils
from config.exception_handler import command_exception_handler
from config.preferences import AppPreferences


class UsageParser(CommandParser):
    """Subcommand parser whose errors always exit with the usage status"""

    def error(self, message):
        raise CommandError(f"Error: {message}", returncode=2)


def integer(value: str) -> int:
    return utils.parse_int(value)


def integer_list(value: str) -> List[int]:
    return utils.parse_int_list(value)


def algorithm_list(value: str) -> List[AlgorithmId]:
    algorithms = [AlgorithmId.get_algorithm(name) for name in value.split(",")]
    if None in algorithms:
        raise ValueError(f"unknown algorithm in {value}")
    return algorithms


class Command(BaseCommand):
    help = "modular multiplicative inverse toolkit: inverse, trace, validate, bench, scan-float, keygen-demo"

    def add_arguments(self, parser: CommandParser):
        preferences = AppPreferences()
        subparsers = parser.add_subparsers(
            dest="subcommand", required=True, parser_class=UsageParser
        )

        inverse = subparsers.add_parser("inverse", help="compute d = e^-1 mod n")
        inverse.add_argument("--e", type=integer, required=True)
        inverse.add_argument("--n", type=integer, required=True)
        inverse.add_argument(
            "--alg", choices=AlgorithmId.choices() + ("all",), default="all"
        )
        inverse.add_argument(
            "--epsilon", type=float, default=preferences.float_epsilon
        )

        trace = subparsers.add_parser("trace", help="print per-iteration variables")
        trace.add_argument("--e", type=integer, required=True)
        trace.add_argument("--n", type=integer, required=True)
        trace.add_argument("--alg", choices=AlgorithmId.choices(), required=True)
        trace.add_argument(
            "--format",
            choices=[str(format) for format in TraceFormat],
            default=str(TraceFormat.TABLE),
        )
        trace.add_argument("--max-rows", type=integer, default=None)

        validate = subparsers.add_parser(
            "validate", help="check every algorithm against sequential search"
        )
        validate.add_argument("--n-max", type=integer, required=True)

        bench = subparsers.add_parser("bench", help="time and count operations")
        bench.add_argument("--bits", type=integer, default=32)
        bench.add_argument("--samples", type=integer, default=1000)
        bench.add_argument("--seed", type=integer, default=0)
        bench.add_argument(
            "--e-fixed",
            type=integer_list,
            default=[],
            help="comma separated public exponents, e.g. "
            + ",".join(str(e) for e in SMALL_E_PRESET),
        )
        bench.add_argument("--n-fixed", type=integer, default=None)
        bench.add_argument(
            "--algs",
            type=algorithm_list,
            default=AlgorithmId.exact_algorithms(),
        )
        bench.add_argument("--repetitions", type=integer, default=None)
        bench.add_argument("--workers", type=integer, default=None)
        bench.add_argument("--format", choices=[str(f) for f in ReportFormat])
        bench.add_argument("--out", required=True)

        scan = subparsers.add_parser(
            "scan-float", help="probe the floating point fraction-integer method"
        )
        scan.add_argument("--e-min", type=integer, default=3)
        scan.add_argument("--e-max", type=integer, default=100_000)
        scan.add_argument("--samples-per-e", type=integer, default=5)
        scan.add_argument("--e-count", type=integer, default=40)
        scan.add_argument("--bits", type=integer, default=40)
        scan.add_argument("--epsilon", type=float, required=True)
        scan.add_argument("--seed", type=integer, default=0)
        scan.add_argument("--workers", type=integer, default=None)
        scan.add_argument("--out", required=True)

        keygen = subparsers.add_parser("keygen-demo", help="toy RSA key pair")
        keygen.add_argument("--p", type=integer, required=True)
        keygen.add_argument("--q", type=integer, required=True)
        keygen.add_argument("--e", type=integer, required=True)
        keygen.add_argument("--message", type=integer, default=2)

    def handle(self, *args, **options):
        handler = getattr(self, "handle_" + options["subcommand"].replace("-", "_"))
        try:
            handler(options)
        except Exception as exc:
            error = command_exception_handler(exc)
            if error is exc:
                raise
            raise error from exc

    def handle_inverse(self, options: dict):
        pair = make_pair(options["e"], options["n"])
        self.stdout.write(f"e={pair.e} n={pair.n}")
        if options["alg"] != "all":
            algorithms = [AlgorithmId(options["alg"])]
        else:
            algorithms = list(AlgorithmId)

        lines, inverses = [], set()
        for alg in algorithms:
            if alg != AlgorithmId.FFIM_FLOAT:
                outcome = EXACT_ALGORITHMS[alg.value](pair)
            else:
                try:
                    outcome = ffim_float_inverse(pair, options["epsilon"])
                except (exceptions.FloatPathFailure, exceptions.DomainError) as e:
                    if len(algorithms) == 1:
                        raise
                    lines.append(f"{alg}: skipped, {e}")
                    continue
            inverses.add(outcome.d)
            lines.append(
                f"{alg}: d={outcome.d} k={outcome.k} iterations={outcome.iterations}"
            )

        if len(inverses) > 1:
            raise CommandError(
                f"algorithms disagree on {pair}: {sorted(inverses)}", returncode=1
            )
        for line in lines:
            self.stdout.write(line)

    def handle_trace(self, options: dict):
        pair = make_pair(options["e"], options["n"])
        _, trace = traced_inverse(
            AlgorithmId(options["alg"]), pair, max_rows=options["max_rows"]
        )
        self.stdout.write(render_trace(trace, TraceFormat(options["format"])))

    def handle_validate(self, options: dict):
        n_max, limit = options["n_max"], AppPreferences().validate_n_max_limit
        if not 2 <= n_max <= limit:
            raise exceptions.DomainError(f"--n-max must lie in [2, {limit}]")

        summary = cross_validate(n_max)
        if not summary.passed:
            raise CommandError(str(summary.discrepancy), returncode=1)
        self.stdout.write(
            self.style.SUCCESS(
                f"checked {summary.pairs_checked} pairs with n <= {n_max} across "
                f"{len(summary.algorithms)} algorithms: 0 discrepancies"
            )
        )

    def handle_bench(self, options: dict):
        spec = WorkloadSpec(
            n_bits=options["bits"],
            samples=options["samples"],
            seed=options["seed"],
            e_fixed=options["e_fixed"],
            n_fixed=options["n_fixed"],
        )
        pairs = generate_workload(spec)
        report = run_benchmark(
            pairs,
            options["algs"],
            spec=spec,
            repetitions=options["repetitions"],
            workers=options["workers"],
        )
        report_format = ReportFormat(
            options["format"] or ReportFormat.from_path(options["out"])
        )
        path = FileUtils().write_text_file(
            options["out"], emit_report(report, report_format)
        )

        for row in report.rows:
            self.stdout.write(
                f"{row.algorithm}: mean_iters={row.mean_iters:.3f} "
                f"max_iters={row.max_iters} mean_divs={row.mean_divs:.3f} "
                f"mean_ns={row.mean_ns:.0f}"
            )
            if row.algorithm == str(AlgorithmId.EUCLID):
                log2_model = self._knuth_mean(pairs, natural_log=False)
                ln_model = self._knuth_mean(pairs, natural_log=True)
                self.stdout.write(
                    f"euclid mean divisions {row.mean_divs:.3f}; "
                    f"0.843*log2(n)+1.47 = {log2_model:.3f}; "
                    f"0.843*ln(n)+1.47 = {ln_model:.3f}"
                )
        self.stdout.write(self.style.SUCCESS(f"report written to {path}"))

    @staticmethod
    def _knuth_mean(pairs, natural_log: bool) -> float:
        return float(
            np.mean(
                [knuth_expected_divisions(pair.n, natural_log) for pair in pairs]
            )
        )

    def handle_scan_float(self, options: dict):
        report = scan_failures(
            options["e_min"],
            options["e_max"],
            options["samples_per_e"],
            options["bits"],
            options["epsilon"],
            options["seed"],
            e_count=options["e_count"],
            workers=options["workers"],
        )
        path = FileUtils().write_text_file(options["out"], report.to_json())

        self.stdout.write(f"pairs: {report.pairs}")
        for verdict, count in report.verdicts.items():
            self.stdout.write(f"{verdict}: {count}")
        self.stdout.write(self.style.SUCCESS(f"report written to {path}"))

    def handle_keygen_demo(self, options: dict):
        key = rsa_toy_keygen(options["p"], options["q"], options["e"])
        self.stderr.write(self.style.WARNING(f"warning: {DEMO_WARNING}"))

        message = options["message"]
        if not 0 <= message < key.n:
            raise exceptions.DomainError(f"--message must lie in [0, {key.n})")
        ciphertext = key.encrypt(message)
        self.stdout.write(f"n={key.n} totient={key.totient} e={key.e} d={key.d}")
        self.stdout.write(
            f"round trip: m={message} c={ciphertext} m'={key.decrypt(ciphertext)}"
        )
