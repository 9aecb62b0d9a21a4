from .run_config import ALL_SCHEMES, REPORT_TABLES, ReportSpec, RunConfig
from .transcript import Transcript
from .report import TableResult, bench_frame, build_table, frame_to_csv
from .commands import cmd_bench, cmd_demo, cmd_keys, cmd_tables
from .cli import CommandLine
