"""
Class defines RunConfig and ReportSpec, the validated settings of one
command line invocation.
"""
# == Standard Library imports ==
from dataclasses import dataclass, field
from pathlib import Path

# == Local imports ==
from processor import BENCHMARK_SCHEMES, SchemeId
from utils.drbg import Drbg
from utils.errors import ParameterError, UnsupportedKindError

# schemes behind "--scheme all": the six compared schemes plus the novel two
ALL_SCHEMES = [s.value for s in BENCHMARK_SCHEMES] + \
    [SchemeId.OUR_IBE.value, SchemeId.OUR_HIBE.value]

PHASES = ("Setup", "Extract", "Encrypt", "Decrypt")
FORMATS = ("table", "csv")

REPORT_TABLES = ("table1", "table4", "table5", "final", "properties",
                 "table6", "boyen-ss", "boyen-mnt", "hibe-compare",
                 "fs-compare")


def resolve_schemes(selector: str | list[str]) -> list[str]:
    """
    Function expands "all" and comma lists into validated scheme names.
    """
    parts = selector if isinstance(selector, list) else selector.split(",")
    names: list[str] = []
    for part in (p.strip().lower() for p in parts):
        if not part:
            continue
        if part == "all":
            names.extend(s for s in ALL_SCHEMES if s not in names)
            continue
        try:
            name = SchemeId(part).value
        except ValueError:
            raise UnsupportedKindError(
                f"unknown scheme {part!r}; expected 'all' or one of "
                f"{[s.value for s in SchemeId]}") from None
        if name not in names:
            names.append(name)
    if not names:
        raise ParameterError("no scheme selected")
    return names


@dataclass
class RunConfig:
    """
    Dataclass for the settings shared by demo, bench and keys. ``seed`` is
    drawn from OS entropy when omitted; ``seed_was_drawn`` tells the
    command to print it for replay.
    """
    schemes: list[str] = field(default_factory=lambda: list(ALL_SCHEMES))
    profile: str = "tiny"
    seed: int | None = None
    trials: int = 1
    phase: str | None = None
    fmt: str = "table"
    kem: bool = False
    depth: int = 2
    periods_log: int = 3
    out: Path | None = None
    data_dir: Path | None = None
    seed_was_drawn: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        if self.depth < 1:
            raise ParameterError(f"depth must be >= 1, got {self.depth}")
        if self.periods_log < 1:
            raise ParameterError(
                f"periods-log must be >= 1, got {self.periods_log}")
        if self.fmt not in FORMATS:
            raise ParameterError(f"format must be one of {FORMATS}")
        if self.phase is not None and self.phase not in PHASES:
            raise ParameterError(f"phase must be one of {PHASES}")
        if self.seed is None:
            _, self.seed = Drbg.from_os()
            self.seed_was_drawn = True
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError("seed must be a 64-bit unsigned integer")

    def rng(self, label: str) -> Drbg:
        """
        Method returns the generator of one named stream of the run.
        """
        return Drbg(self.seed).fork(label)


@dataclass
class ReportSpec:
    """
    Dataclass for the tables the tables command renders.
    """
    which: tuple[str, ...] = REPORT_TABLES
    fmt: str = "table"
    out: Path | None = None
    data_dir: Path | None = None

    def __post_init__(self):
        if "all" in self.which:
            self.which = REPORT_TABLES
        if not self.which:
            raise ParameterError("no table selected")
        unknown = [name for name in self.which if name not in REPORT_TABLES]
        if unknown:
            raise ParameterError(f"unknown tables {unknown}; expected "
                                 f"{list(REPORT_TABLES)}")
        if self.fmt not in FORMATS:
            raise ParameterError(f"format must be one of {FORMATS}")
