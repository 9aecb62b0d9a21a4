"""
Class defines Transcript, the line log a command builds while it runs and
prints to stdout. Nothing time-dependent goes in, so a fixed seed gives a
byte-identical transcript.
"""
# == Standard Library imports ==
import sys
from typing import TextIO

TITLE = "IBE toolkit"


class Transcript:
    def __init__(self, title: str = TITLE, stream: TextIO | None = None,
                 echo: bool = True):
        self.lines: list[str] = []
        self.stream = stream
        self.echo = echo
        self.failures = 0
        self.update_message(title)

    def update_message(self, message: str) -> None:
        """Start a new section headed by ``message``."""
        if self.lines:
            self.log("")
        self.log(f"== {message} ==")

    def log(self, message: str) -> None:
        """Append a line, echoing it to the stream."""
        self.lines.append(message)
        if self.echo:
            print(message, file=self.stream or sys.stdout)

    def fail(self, message: str) -> None:
        self.failures += 1
        self.log(f"FAIL {message}")

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"
