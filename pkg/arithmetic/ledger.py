"""
Module defines OpLedger, the operation ledger every arithmetic kernel
reports to, and LedgerSnapshot, its immutable copy.

Two views are kept. The inclusive view counts every operation, including
the ones issued inside a composite (an Exp counts its squarings, a pairing
counts its Miller loop). The top-level view counts only operations issued
outside any composite, which is the granularity of the symbolic cost rows.
"""
# == Standard Library imports ==
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

COUNTER_KINDS: tuple[str, ...] = (
    "Mul", "Sq", "Inv", "Exp",
    "MulK", "SqK", "InvK",
    "ECADD", "ECDBL", "ScalarMul", "MapToPoint",
    "MillerLoop", "FinalExp", "Pairing", "PairingRatio",
)

COMPOSITE_KINDS = frozenset({
    "Exp", "MulK", "SqK", "InvK", "ECADD", "ECDBL", "ScalarMul",
    "MapToPoint", "MillerLoop", "FinalExp", "Pairing", "PairingRatio",
})


def _zeroes() -> dict[str, int]:
    return {kind: 0 for kind in COUNTER_KINDS}


@dataclass(frozen=True)
class LedgerSnapshot:
    """
    Dataclass for an immutable ledger copy; also the result type of diffs.
    """
    counters: Mapping[str, int]
    top: Mapping[str, int]
    phase_tag: str | None = None

    def __getitem__(self, kind: str) -> int:
        return self.counters[kind]

    def inclusive(self) -> dict[str, int]:
        """
        Method returns nonzero inclusive counters.
        """
        return {k: v for k, v in self.counters.items() if v}

    def top_level(self) -> dict[str, int]:
        """
        Method returns nonzero top-level counters.
        """
        return {k: v for k, v in self.top.items() if v}

    def diff(self, later: "LedgerSnapshot") -> "LedgerSnapshot":
        """
        Method subtracts this snapshot from a later one, per counter.
        :param later: Snapshot taken after this one.
        :return: Snapshot of the difference.
        """
        return LedgerSnapshot(
            counters=MappingProxyType(
                {k: later.counters[k] - self.counters[k] for k in COUNTER_KINDS}),
            top=MappingProxyType(
                {k: later.top[k] - self.top[k] for k in COUNTER_KINDS}),
            phase_tag=later.phase_tag,
        )

    def __add__(self, other: "LedgerSnapshot") -> "LedgerSnapshot":
        return LedgerSnapshot(
            counters=MappingProxyType(
                {k: self.counters[k] + other.counters[k] for k in COUNTER_KINDS}),
            top=MappingProxyType(
                {k: self.top[k] + other.top[k] for k in COUNTER_KINDS}),
            phase_tag=self.phase_tag or other.phase_tag,
        )

    @classmethod
    def empty(cls) -> "LedgerSnapshot":
        return cls(counters=MappingProxyType(_zeroes()),
                   top=MappingProxyType(_zeroes()))


@dataclass
class OpLedger:
    """
    Dataclass for a mutable per-context operation accumulator. Activate it
    with ``with OpLedger() as ledger:``; kernels then report to it.
    """
    counters: dict[str, int] = field(default_factory=_zeroes)
    top: dict[str, int] = field(default_factory=_zeroes)
    phase_tag: str | None = None
    phases: dict[str, LedgerSnapshot] = field(default_factory=dict)
    _depth: int = 0
    _tokens: list = field(default_factory=list)

    def tick(self, kind: str, n: int = 1) -> None:
        self.counters[kind] += n
        if self._depth == 0:
            self.top[kind] += n

    @contextmanager
    def composite(self, kind: str) -> Iterator[None]:
        """
        Method counts one composite operation and nests its constituents.
        """
        self.tick(kind)
        self._depth += 1
        try:
            yield
        finally:
            self._depth -= 1

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        """
        Method tags a phase; its diff accumulates into ``phases[name]``.
        """
        previous = self.phase_tag
        self.phase_tag = name
        before = self.snapshot()
        try:
            yield
        finally:
            delta = before.diff(self.snapshot())
            if name in self.phases:
                delta = self.phases[name] + delta
            self.phases[name] = LedgerSnapshot(delta.counters, delta.top, name)
            self.phase_tag = previous

    def absorb(self, other: "OpLedger") -> None:
        """
        Method adds another ledger's operations as if they were issued here.
        """
        for kind in COUNTER_KINDS:
            self.counters[kind] += other.counters[kind]
            if self._depth == 0:
                self.top[kind] += other.top[kind]

    def snapshot(self) -> LedgerSnapshot:
        return LedgerSnapshot(counters=MappingProxyType(dict(self.counters)),
                              top=MappingProxyType(dict(self.top)),
                              phase_tag=self.phase_tag)

    def merge(self, other: "OpLedger") -> None:
        """
        Method adds another ledger's totals and phases into this one.
        """
        for kind in COUNTER_KINDS:
            self.counters[kind] += other.counters[kind]
            self.top[kind] += other.top[kind]
        for name, snap in other.phases.items():
            self.phases[name] = self.phases[name] + snap \
                if name in self.phases else snap

    def reset(self) -> None:
        self.counters = _zeroes()
        self.top = _zeroes()
        self.phases = {}
        self.phase_tag = None

    def __enter__(self) -> "OpLedger":
        self._tokens.append(_ACTIVE.set(self))
        return self

    def __exit__(self, *exc) -> None:
        _ACTIVE.reset(self._tokens.pop())


class DiscardLedger(OpLedger):
    """
    Class for the sink that is active while no ledger is entered; it
    records nothing.
    """

    def tick(self, kind: str, n: int = 1) -> None:
        pass

    def absorb(self, other: OpLedger) -> None:
        pass

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        yield


_DEFAULT_LEDGER = DiscardLedger()
_ACTIVE: ContextVar[OpLedger] = ContextVar("active_ledger",
                                           default=_DEFAULT_LEDGER)


def current_ledger() -> OpLedger:
    return _ACTIVE.get()


def tick(kind: str, n: int = 1) -> None:
    _ACTIVE.get().tick(kind, n)


def composite(kind: str):
    return _ACTIVE.get().composite(kind)


def ledger_snapshot(ledger: OpLedger | None = None) -> LedgerSnapshot:
    """
    Function returns an immutable copy of the given (or active) ledger.
    """
    return (ledger or current_ledger()).snapshot()


def ledger_diff(before: LedgerSnapshot,
                after: LedgerSnapshot) -> LedgerSnapshot:
    return before.diff(after)
