import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from coxinv.algebra.format import format_rational
from coxinv.algebra.golden import Golden


def _convert_json_value(obj: Any) -> Any:
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Golden):
        return str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {k: _convert_json_value(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_convert_json_value(v) for v in obj]
    return obj


def custom_as_dict_factory(data) -> dict:
    def convert_value(obj):
        if isinstance(obj, Enum):
            return obj.value
        return obj

    return {k: convert_value(v) for k, v in data}


def custom_as_json_dict_factory(data) -> dict:
    return {k: _convert_json_value(v) for k, v in data}


class Mode(Enum):
    EXACT = 'exact'
    MODULAR = 'modular'


class Status(Enum):
    PASS = 'pass'
    FAIL = 'fail'


@dataclass
class BaseModel:
    def as_dict(self) -> dict:
        """Dumps dataclass into dictionary."""

        return dataclasses.asdict(self, dict_factory=custom_as_dict_factory)

    def as_json(self) -> dict:
        """Dumps dataclass into json dictionary.

        Field elements of Q(sqrt 5) and rationals are dumped in their canonical text form.
        """

        return dataclasses.asdict(self, dict_factory=custom_as_json_dict_factory)


@dataclass
class CheckResult(BaseModel):
    label: str
    status: Status
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS


@dataclass
class VerifyReport(BaseModel):
    """Outcome of one verification suite; the status is `pass` exactly when every check passed."""

    suite: str
    status: Status = Status.PASS
    checks: list[CheckResult] = field(default_factory=list)
    derived_constants: dict[str, Golden] = field(default_factory=dict)
    """Constants computed while checking, e.g. proportionality factors."""
    wall_time_ms: int = 0
    mode: Mode | None = None
    seed: int | None = None
    points: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def add_check(self, label: str, passed: bool, detail: str = '') -> CheckResult:
        check = CheckResult(label, Status.PASS if passed else Status.FAIL, detail)
        self.checks.append(check)
        if not passed:
            self.status = Status.FAIL
        return check

    def include(self, other: 'VerifyReport') -> 'VerifyReport':
        """Absorbs the checks and constants of a sub-report."""
        for check in other.checks:
            self.checks.append(check)
            if not check.passed:
                self.status = Status.FAIL
        self.derived_constants.update(other.derived_constants)
        return self

    @classmethod
    def for_spec(cls, spec: 'SuiteSpec') -> 'VerifyReport':
        return cls(suite=spec.name, mode=spec.mode, seed=spec.seed, points=spec.points)

    def derive(self, name: str, value: Golden) -> None:
        self.derived_constants[name] = value

    def expect_constant(self, name: str, expected: Golden) -> CheckResult:
        """Checks a previously derived constant against its known value."""
        derived = self.derived_constants.get(name)
        return self.add_check(
            f'{name} = {expected}', derived == expected, f'derived {derived}'
        )

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


@dataclass
class SuiteSpec(BaseModel):
    name: str
    mode: Mode = Mode.MODULAR
    seed: int = 0
    points: int = 40


@dataclass
class BenchRecord(BaseModel):
    workload: str
    wall_time_ms: int
    peak_terms: dict[str, int] = field(default_factory=dict)
    """Largest term count of each named intermediate."""
    timings_ms: dict[str, int] = field(default_factory=dict)


@dataclass
class Emission(BaseModel):
    """An object printed by `emit`: its canonical text and its JSON form."""

    name: str
    text: str
    payload: dict[str, Any] = field(default_factory=dict)
    header: str | None = None
    """Provenance line written above computed objects that have no printed reference."""
