# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

import csv
import io
import json
from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from ._compat import StrEnum
from typing import Any, Iterable, Optional


class RecordError(ValueError):
    """
    Raised for a record that is both passed and skipped, or for an unknown
    report format.
    """


class Format(StrEnum):
    TEXT = 'text'
    JSON = 'json'
    CSV  = 'csv'


CSV_HEADER = ['check', 'params', 'expected', 'observed', 'pass', 'skipped']


@dataclass(frozen=True)
class CheckRecord:
    check:    str
    params:   tuple[tuple[str, str], ...]
    expected: str
    observed: str
    passed:   bool
    skipped:  bool = False
    reason:   str = ''


    def __post_init__(self):
        if self.passed and self.skipped:
            raise RecordError(f"record '{self.check}' cannot be both passed and skipped")


    @property
    def status(self) -> str:
        if self.skipped:
            return 'skip'

        return 'pass' if self.passed else 'fail'


    @property
    def sort_key(self) -> tuple:
        return (self.check, self.params)


    def param(self, key: str) -> Optional[str]:
        return dict(self.params).get(key)


    def params_text(self) -> str:
        return ';'.join(f"{k}={v}" for k, v in self.params)


    def to_json(self) -> dict:
        out = {
            'check':    self.check,
            'params':   dict(self.params),
            'expected': self.expected,
            'observed': self.observed,
            'pass':     self.passed,
            'skipped':  self.skipped,
        }

        if self.reason:
            out['reason'] = self.reason

        return out


def _params(params: dict[str, Any]) -> tuple[tuple[str, str], ...]:
    return tuple((str(k), str(v)) for k, v in params.items())


def record(check: str, params: dict[str, Any], expected: Any, observed: Any, passed: Optional[bool] = None) -> CheckRecord:
    """
    Builds a checked record. Values are rendered with `str`; unless `passed`
    is given, the check passes when both renderings are equal.
    """

    expected = str(expected)
    observed = str(observed)

    if passed is None:
        passed = expected == observed

    return CheckRecord(check, _params(params), expected, observed, bool(passed))


def skipped(check: str, params: dict[str, Any], reason: str, expected: Any = '') -> CheckRecord:
    """
    A record for a check that could not be computed.
    """

    return CheckRecord(check, _params(params), str(expected), '', False, True, reason)


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)


    def __post_init__(self):
        self.records = sorted(self.records, key=lambda r: r.sort_key)


    def extend(self, records: Iterable[CheckRecord]):
        self.records = sorted(self.records + list(records), key=lambda r: r.sort_key)


    @property
    def total(self) -> int:
        return len(self.records)


    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.passed)


    @property
    def skipped(self) -> int:
        return sum(1 for r in self.records if r.skipped)


    @property
    def failed(self) -> int:
        return self.total - self.passed - self.skipped


    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == 'fail']


    def summary(self) -> dict[str, int]:
        return {
            'total':   self.total,
            'passed':  self.passed,
            'failed':  self.failed,
            'skipped': self.skipped,
        }


    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


    def render(self, fmt: Format) -> str:
        try:
            fmt = Format(fmt)
        except ValueError:
            raise RecordError(f"unknown report format '{fmt}'")

        if fmt == Format.JSON:
            return self.render_json()
        elif fmt == Format.CSV:
            return self.render_csv()

        return self.render_text()


    def render_text(self) -> str:
        lines = []

        for r in self.records:
            line = f"{r.status.upper():<4} {r.check} [{r.params_text()}] expected={r.expected} observed={r.observed}"

            if r.reason:
                line += f" ({r.reason})"

            lines.append(line)

        s = self.summary()
        lines.append(f"{s['total']} checks: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped")
        return '\n'.join(lines) + '\n'


    def render_json(self) -> str:
        doc = {
            'summary': self.summary(),
            'records': [r.to_json() for r in self.records],
        }

        return json.dumps(doc, indent=2) + '\n'


    def render_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_HEADER)

        for r in self.records:
            writer.writerow([r.check, r.params_text(), r.expected, r.observed, str(r.passed).lower(), str(r.skipped).lower()])

        return buffer.getvalue()
