import sys
from typing import Iterable, List, Optional, TextIO, Tuple

from termcolor import colored

COLUMN_WIDTH = 40


class Console:
    """
    Human-facing output: emoji headers, ``➜`` bullet rows and a statistics block.

    Everything goes to ``stream`` (stdout unless JSON output owns it); errors always go
    to stderr. ``quiet`` keeps only errors, ``verbose`` enables step traces.
    """

    def __init__(self, quiet: bool = False, verbose: bool = False, stream: Optional[TextIO] = None):
        self.quiet = quiet
        self.verbose = verbose
        self.stream = stream

    def _out(self) -> TextIO:
        return self.stream if self.stream is not None else sys.stdout

    def _print(self, text: str) -> None:
        if not self.quiet:
            print(text, file=self._out())

    def header(self, text: str, color: str = "cyan") -> None:
        self._print(colored(f"\n{text}", color))

    def section(self, text: str) -> None:
        self._print(colored(f"\n{text}", "white", attrs=["bold"]))

    def item(self, label: str, value: str, color: str = "yellow", bold: bool = False) -> None:
        attrs = ["bold"] if bold else []
        self._print(
            f"  {colored('➜', 'green')} {label.ljust(COLUMN_WIDTH)} {colored(value, color, attrs=attrs)}"
        )

    def verdict(self, label: str, verdict: str, expected: str, millis: Optional[float] = None) -> None:
        color = "green" if verdict == expected else "red"
        text = verdict if verdict == expected else f"{verdict} (expected {expected})"
        timing = f" {colored(f'{millis:.1f} ms', 'yellow')}" if millis is not None else ""
        self._print(
            f"  {colored('➜', color)} {label.ljust(COLUMN_WIDTH)} {colored(text, color)}{timing}"
        )

    def stats(self, title: str, rows: Iterable[Tuple[str, str, str]]) -> None:
        self.section(title)
        for label, value, color in rows:
            self.item(label, value, color, bold=label.startswith("Failed") and value != "0")

    def lines(self, label: str, values: List[str]) -> None:
        for value in values:
            self.item(label, value, "white")
            label = ""

    def debug(self, text: str) -> None:
        if self.verbose:
            self._print(colored(f"    {text}", "blue"))

    def warning(self, text: str) -> None:
        self._print(colored(f"Warning: {text}", "yellow"))

    def error(self, text: str) -> None:
        print(colored(f"Error: {text}", "red"), file=sys.stderr)
