"""
Class defines CommandLine, the argparse front end of the toolkit. It
resolves settings, wires logging and dispatches to the four commands.
"""
# == Standard Library imports ==
import argparse
import logging
from pathlib import Path

# == Local imports ==
from utils.config import configure_logging, load_settings
from utils.errors import IbeToolkitError
from .commands import cmd_bench, cmd_demo, cmd_keys, cmd_tables, report_error
from .run_config import (FORMATS, PHASES, REPORT_TABLES, ReportSpec, RunConfig,
                         resolve_schemes)

logger = logging.getLogger(__name__)

KEY_ACTIONS = ("gen", "extract", "inspect", "encrypt", "decrypt")


class CommandLine:
    def __init__(self, prog: str = "app.py"):
        self.parser = self._build_parser(prog)

    @staticmethod
    def _add_common(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--data-dir", type=Path, default=None,
                            help="directory holding curves/ and tables/")
        parser.add_argument("--log-level", default=None,
                            help="logging level name, e.g. DEBUG")
        parser.add_argument("--format", dest="fmt", choices=FORMATS,
                            default="table")
        parser.add_argument("--out", type=Path, default=None,
                            help="output file (bench) or directory (tables, "
                                 "keys gen)")

    @staticmethod
    def _add_run(parser: argparse.ArgumentParser, default_scheme: str) -> None:
        parser.add_argument("--scheme", default=default_scheme,
                            help="'all' or a comma list of scheme names")
        parser.add_argument("--profile", default="tiny",
                            help="tiny, mini, small, bench or a .param file")
        parser.add_argument("--seed", type=int, default=None,
                            help="64-bit seed; drawn and printed when omitted")
        parser.add_argument("--trials", type=int, default=1)
        parser.add_argument("--phase", choices=PHASES, default=None)
        parser.add_argument("--kem", action="store_true",
                            help="encrypt a byte payload through the KEM wrapper")
        parser.add_argument("--depth", type=int, default=2,
                            help="HIBE depth v")
        parser.add_argument("--periods-log", type=int, default=3,
                            help="fs-HIBE time tree depth l (N = 2^l periods)")

    def _build_parser(self, prog: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog=prog, description="Pairing-based IBE/HIBE toolkit")
        commands = parser.add_subparsers(dest="command", required=True)

        demo = commands.add_parser("demo", help="run schemes end to end")
        self._add_run(demo, "all")
        self._add_common(demo)

        bench = commands.add_parser("bench", help="count and time operations")
        self._add_run(bench, "all")
        self._add_common(bench)

        tables = commands.add_parser("tables", help="render the scorecards")
        tables.add_argument("--which", default="all",
                            help=f"'all' or a comma list of {list(REPORT_TABLES)}")
        self._add_common(tables)

        keys = commands.add_parser("keys", help="key and ciphertext files")
        keys.add_argument("action", choices=KEY_ACTIONS)
        self._add_run(keys, "our-ibe")
        self._add_common(keys)
        keys.add_argument("--params", type=Path, default=None)
        keys.add_argument("--master", type=Path, default=None)
        keys.add_argument("--key", type=Path, default=None)
        keys.add_argument("--in", dest="in_path", type=Path, default=None,
                          help="input file (record to inspect, payload or "
                               "ciphertext)")
        keys.add_argument("--identity", default=None,
                          help="identity; hierarchical ones as a/b/c")
        keys.add_argument("--armor", action="store_true",
                          help="write hex-armored text instead of binary")
        return parser

    @staticmethod
    def _run_config(args: argparse.Namespace) -> RunConfig:
        return RunConfig(schemes=resolve_schemes(args.scheme),
                         profile=args.profile, seed=args.seed,
                         trials=args.trials, phase=args.phase, fmt=args.fmt,
                         kem=args.kem, depth=args.depth,
                         periods_log=args.periods_log, out=args.out,
                         data_dir=args.data_dir)

    def run(self, argv: list[str] | None = None) -> int:
        """
        Method parses ``argv`` and runs one command.
        :return: Exit status, 0 iff every internal check passed.
        """
        args = self.parser.parse_args(argv)
        settings = load_settings(data_dir=args.data_dir, log_level=args.log_level)
        configure_logging(settings)
        args.data_dir = settings.data_dir
        logger.debug("command %s, data dir %s", args.command, settings.data_dir)
        try:
            if args.command == "tables":
                which = tuple(w.strip() for w in args.which.split(",")
                              if w.strip())
                return cmd_tables(ReportSpec(which, args.fmt, args.out,
                                             args.data_dir))
            config = self._run_config(args)
            if args.command == "demo":
                return cmd_demo(config)
            if args.command == "bench":
                return cmd_bench(config)
            paths = {"params": args.params, "master": args.master,
                     "key": args.key, "in": args.in_path, "file": args.in_path,
                     "out": args.out}
            return cmd_keys(args.action, config, paths, args.identity,
                            args.armor)
        except IbeToolkitError as exc:
            return report_error(exc)
