"""Verification reports shared by the library and the command line."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .exact import format_rational, parse_rational

__all__ = ["PASS", "FAIL", "REPORTED", "Entry", "VerificationReport", "run_suite", "Grid"]

PASS = "pass"
FAIL = "fail"
REPORTED = "reported"
STATUSES = (PASS, FAIL, REPORTED)


@dataclass(frozen=True)
class Entry:
    id: str
    j: Optional[int]
    ell: Optional[int]
    mu: Optional[str]
    status: str
    residual: str
    ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def sort_key(self):
        mu = parse_rational(self.mu) if self.mu is not None else Fraction(-(10**9))
        return (
            self.id,
            mu,
            -1 if self.ell is None else self.ell,
            -1 if self.j is None else self.j,
            self.residual,
        )


def make_entry(identity: str, j, ell, mu, residual, *, asserted: bool = True, ms: int = 0) -> Entry:
    """Build an entry from a residual: zero means pass.

    ``residual`` may be a polynomial-like object (zero test via ``bool``), a
    bool (True = holds), or a ``(ok, text)`` pair.
    """
    if isinstance(residual, tuple):
        ok, text = residual
    elif isinstance(residual, bool):
        ok, text = residual, "0" if residual else "identity violated"
    else:
        ok, text = not bool(residual), str(residual)
    if not asserted:
        status = REPORTED
    else:
        status = PASS if ok else FAIL
    return Entry(
        id=identity,
        j=j,
        ell=ell,
        mu=None if mu is None else format_rational(Fraction(mu)),
        status=status,
        residual=text,
        ms=ms,
    )


@dataclass
class VerificationReport:
    suite: str = "mjpoly"
    entries: list[Entry] = field(default_factory=list)

    def add(self, entry: Entry) -> None:
        self.entries.append(entry)

    def extend(self, other: VerificationReport) -> None:
        self.entries.extend(other.entries)

    def sorted(self) -> VerificationReport:
        return VerificationReport(self.suite, sorted(self.entries, key=Entry.sort_key))

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_dict(self) -> dict:
        return {"suite": self.suite, "entries": [asdict(e) for e in self.sorted().entries]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(data["suite"], [Entry(**e) for e in data["entries"]])

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "entries"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "j", "ell", "mu", "status", "residual", "ms"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "j": {"type": ["integer", "null"]},
                    "ell": {"type": ["integer", "null"]},
                    "mu": {"type": ["string", "null"]},
                    "status": {"enum": list(STATUSES)},
                    "residual": {"type": "string"},
                    "ms": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


@contextmanager
def stopwatch(enabled: bool = True) -> Iterator[list[int]]:
    """Yields a one-slot list filled with elapsed milliseconds (0 if disabled)."""
    box = [0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        if enabled:
            box[0] = int(round((time.perf_counter() - t0) * 1000))


@dataclass(frozen=True)
class Grid:
    """Parameter grid for :func:`run_suite`."""

    suites: tuple[str, ...] = ()
    jmax: int = 8
    ellmax: int = 3
    mus: tuple[Fraction, ...] = ()
    xs: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1), Fraction(2))
    quad_panels: int | None = None
    quad_order: int | None = None
    timings: bool = False


def run_suite(grid: Grid) -> VerificationReport:
    """Run every registered identity check selected by ``grid.suites``.

    Failures are recorded as entries; this never raises for a failing
    identity.  An empty suite list or empty parameter grid gives an empty
    report.
    """
    from . import suites

    report = VerificationReport()
    for name in grid.suites:
        report.extend(suites.SUITES[name](grid))
    return report.sorted()
