import argparse
import sys
import time
from typing import Callable, Dict, List, Optional

from .ConservationLaw import ConservationLaw
from .Console import Console
from .Determining import Determining
from .Errors import JetlawError
from .IrSuite import IrSuite
from .NoetherScan import FORCED_ZERO, INVERSE, INVERSE_ADJOINT, NOETHER, NoetherScan, ScanStep
from .Parser import Parser
from .Report import Report, SuiteReport, verdict_of
from .RunConfig import RunConfig
from .Variational import Variational

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_EQUATION = "gir(a=a, f=f)"


class Cli:
    """The ``jetlaw`` command line."""

    def __init__(self, environ: Optional[Dict[str, str]] = None):
        self.environ = environ
        self.console = Console()
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", action="store_true", help="print a JSON report on stdout")
        common.add_argument(
            "--fn",
            action="append",
            default=[],
            metavar="NAME/ARITY",
            help="declare an opaque function for the expression language",
        )
        common.add_argument("-q", "--quiet", action="store_true", help="only print errors")
        common.add_argument("-v", "--verbose", action="store_true", help="trace individual steps")

        parser = argparse.ArgumentParser(
            prog="jetlaw",
            description="Conservation laws, cosymmetries and Noether operators of evolution equations.",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        verify = commands.add_parser("verify", parents=[common], help="check a conservation law")
        verify.add_argument("--eq", default=DEFAULT_EQUATION, help="equation spec")
        verify.add_argument("--rho", required=True, help="density")
        verify.add_argument("--sigma", default="0", help="x-flux")
        verify.add_argument("--zeta", default="0", help="y-flux")

        euler = commands.add_parser("euler", parents=[common], help="variational derivative")
        euler.add_argument("expression")

        cosym = commands.add_parser("cosym", parents=[common], help="cosymmetry residual")
        cosym.add_argument("--eq", default=DEFAULT_EQUATION)
        cosym.add_argument("--gamma", required=True)

        sym = commands.add_parser("sym", parents=[common], help="symmetry residual")
        sym.add_argument("--eq", default=DEFAULT_EQUATION)
        sym.add_argument("--char", required=True, help="symmetry characteristic")

        scan = commands.add_parser(
            "noether-scan", parents=[common], help="leading-term scan for Noether operators"
        )
        scan.add_argument("--eq", default=DEFAULT_EQUATION)
        scan.add_argument("--rmax", type=int, default=2)
        scan.add_argument("--smax", type=int, default=2)
        scan.add_argument("--order", type=int, default=2, help="jet order of the coefficients")
        scan.add_argument("--inverse", action="store_true", help="inverse Noether operators")
        scan.add_argument(
            "--adjoint-left",
            action="store_true",
            help="with --inverse, use D_F* as the left factor",
        )

        suite = commands.add_parser("suite", help="run a verification suite")
        suites = suite.add_subparsers(dest="suite", required=True)
        ir = suites.add_parser("ir", parents=[common], help="cases for u_t = -(u_xxx + a u_y + f)_x")
        ir.add_argument("--list", action="store_true", help="list case ids and exit")
        ir.add_argument("--case", action="append", default=[], metavar="ID")
        ir.add_argument("--jobs", type=int, default=None, help="concurrent cases (JETLAW_JOBS)")
        ir.add_argument("--no-timing", action="store_true", help="report 0 ms for every case")
        return parser

    def run(self, argv: List[str]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        try:
            config = RunConfig(
                jobs=getattr(args, "jobs", None),
                json=args.json,
                timing=not getattr(args, "no_timing", False),
                verbose=args.verbose,
                quiet=args.quiet,
                functions=args.fn,
                environ=self.environ,
            )
        except JetlawError as e:
            self.console.error(str(e))
            return EXIT_USAGE
        self.console = Console(
            quiet=config.quiet,
            verbose=config.verbose,
            stream=sys.stderr if config.json else None,
        )

        handlers: Dict[str, Callable[[argparse.Namespace, RunConfig], int]] = {
            "verify": self.verify,
            "euler": self.euler,
            "cosym": self.cosym,
            "sym": self.sym,
            "noether-scan": self.noether_scan,
            "suite": self.suite,
        }
        try:
            return handlers[args.command](args, config)
        except JetlawError as e:
            self.console.error(str(e))
            return EXIT_USAGE

    # helpers

    def _emit(self, config: RunConfig, report: SuiteReport) -> None:
        if config.json:
            print(report.to_json())

    def _single(self, config: RunConfig, case: Report) -> int:
        self.console.verdict(case.id, case.verdict, case.expected, case.millis if config.timing else None)
        self.console.item("Residual:", case.residual, "white")
        if not config.timing:
            case.millis = 0.0
        self._emit(config, SuiteReport(case.id, [case]))
        return EXIT_OK if case.passed else EXIT_FAILED

    # commands

    def verify(self, args: argparse.Namespace, config: RunConfig) -> int:
        parser = Parser(config.function_table())
        eq = parser.parse_equation(args.eq)
        started = time.perf_counter()
        law = ConservationLaw(
            parser.parse(args.rho), parser.parse(args.sigma), parser.parse(args.zeta), eq
        )
        self.console.header("🔍 Verifying conservation law...")
        self.console.item("Equation:", str(eq), "blue")
        residual = law.residual()
        if law.is_degenerate():
            self.console.warning("all three components are zero")
        elif residual.is_zero():
            chi = law.characteristic()
            self.console.item("Characteristic:", str(chi), "cyan")
            self.console.item("Trivial (vanishing characteristic):", str(chi.is_zero()), "cyan")
        case = Report.of_residual(
            "verify",
            residual,
            millis=(time.perf_counter() - started) * 1000,
            inputs={"eq": args.eq, "rho": args.rho, "sigma": args.sigma, "zeta": args.zeta},
            provenance="cli",
        )
        return self._single(config, case)

    def euler(self, args: argparse.Namespace, config: RunConfig) -> int:
        parser = Parser(config.function_table())
        expression = parser.parse(args.expression)
        started = time.perf_counter()
        result = Variational.euler(expression)
        self.console.header("🧮 Variational derivative...")
        self.console.item("delta/delta u:", str(result), "cyan")
        case = Report(
            "euler",
            verdict_of(result),
            str(result),
            millis=(time.perf_counter() - started) * 1000,
            inputs={"expression": args.expression},
            expected=verdict_of(result),
            provenance="cli",
        )
        if not config.timing:
            case.millis = 0.0
        self._emit(config, SuiteReport("euler", [case]))
        return EXIT_OK

    def _residual_command(self, command: str, args, config: RunConfig, field: str, compute) -> int:
        parser = Parser(config.function_table())
        eq = parser.parse_equation(args.eq)
        text = getattr(args, field)
        value = parser.parse(text)
        started = time.perf_counter()
        residual = compute(eq, value)
        case = Report.of_residual(
            command,
            residual,
            millis=(time.perf_counter() - started) * 1000,
            inputs={"eq": args.eq, field: text},
            provenance="cli",
        )
        self.console.item("Equation:", str(eq), "blue")
        return self._single(config, case)

    def cosym(self, args: argparse.Namespace, config: RunConfig) -> int:
        self.console.header("🔍 Checking cosymmetry...")
        return self._residual_command("cosym", args, config, "gamma", Determining.cosym_residual)

    def sym(self, args: argparse.Namespace, config: RunConfig) -> int:
        self.console.header("🔍 Checking symmetry characteristic...")
        return self._residual_command("sym", args, config, "char", Determining.sym_residual)

    def noether_scan(self, args: argparse.Namespace, config: RunConfig) -> int:
        if min(args.rmax, args.smax, args.order) < 0:
            self.console.error("--rmax, --smax and --order must be nonnegative")
            return EXIT_USAGE
        if args.adjoint_left and not args.inverse:
            self.console.error("--adjoint-left only applies with --inverse")
            return EXIT_USAGE
        eq = Parser(config.function_table()).parse_equation(args.eq)
        pattern = NOETHER if not args.inverse else (INVERSE_ADJOINT if args.adjoint_left else INVERSE)

        def trace(step: ScanStep) -> None:
            i, j = step.key
            self.console.debug(f"Dx^{i} Dy^{j}: {step.factor}*{step.coefficient_name} -> 0")

        self.console.header(f"🚀 Scanning {pattern} operators...")
        self.console.item("Equation:", str(eq), "blue")
        report = NoetherScan(eq, on_step=trace).run(args.rmax, args.smax, args.order, pattern)
        self.console.item("Coefficients forced to zero:", str(len(report.chain)), "cyan")
        if report.factors():
            self.console.item("Leading factors:", ", ".join(str(c) for c in report.factors()), "cyan")
        case = Report(
            "noether-scan",
            report.verdict,
            "0" if report.forced_zero else str(report.offending or "unresolved coefficients remain"),
            millis=report.millis if config.timing else 0.0,
            inputs={
                "eq": args.eq,
                "pattern": pattern,
                "bounds": f"r<={args.rmax}, s<={args.smax}, order {args.order}",
                "chain": ", ".join(report.chain_names()),
            },
            expected=FORCED_ZERO,
            provenance="cli",
        )
        return self._single(config, case)

    def suite(self, args: argparse.Namespace, config: RunConfig) -> int:
        suite = IrSuite(
            jobs=config.jobs,
            timing=config.timing,
            on_case=lambda case: self.console.verdict(
                case.id, case.verdict, case.expected, case.millis if config.timing else None
            ),
        )
        if args.list:
            for case_id in suite.case_ids():
                print(case_id)
            return EXIT_OK
        ids = args.case or None
        if ids:
            for case_id in ids:
                suite.case(case_id)

        started = time.perf_counter()
        self.console.header(f"🚀 Running suite ir ({config.jobs} job(s))...")
        report = suite.run(ids)
        elapsed = time.perf_counter() - started

        if report.all_passed():
            self.console.header("✨ All verdicts as expected!", "green")
        else:
            self.console.header("❌ Some verdicts differ from the expected ones", "red")
        self.console.stats(
            "📊  Suite Statistics:",
            [
                ("Cases:", str(len(report.cases)), "cyan"),
                ("Passed:", str(report.passed), "green"),
                ("Failed:", str(report.failed), "red" if report.failed else "green"),
                ("Run time:", f"{elapsed:.2f}s" if config.timing else "-", "yellow"),
            ],
        )
        self.console.section("📝  Notes:")
        self.console.lines("", report.notes)
        self._emit(config, report)
        return EXIT_OK if report.all_passed() else EXIT_FAILED
