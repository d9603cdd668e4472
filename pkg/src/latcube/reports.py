"""Machine-readable check reports shared by the library and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def jsonable(value):
    """Exact values to JSON-safe structures: ints stay, Fractions become 'p/q'."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple, frozenset, set)):
        seq = sorted(value, key=str) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in seq]
    raise TypeError(f"cannot serialize {value!r}")


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one verifiable claim over a corpus of instances.

    failures holds (instance id, witness) pairs; passes + len(failures)
    always equals instances.
    """

    theorem_id: str
    instances: int
    passes: int
    failures: tuple = ()

    def __post_init__(self):
        assert self.passes + len(self.failures) == self.instances

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self):
        return {
            "theorem": self.theorem_id,
            "instances": self.instances,
            "passes": self.passes,
            "failures": [
                {"instance": inst, "witness": jsonable(wit)} for inst, wit in self.failures
            ],
        }


def merge_reports(theorem_id: str, reports) -> TheoremReport:
    """Combine per-instance reports for the same claim into one."""
    instances = sum(r.instances for r in reports)
    passes = sum(r.passes for r in reports)
    failures = tuple(f for r in reports for f in r.failures)
    return TheoremReport(theorem_id, instances, passes, failures)


@dataclass(frozen=True)
class CheckEntry:
    """One named boolean check with an optional witness payload."""

    name: str
    ok: bool
    witness: object = None

    def to_json_dict(self):
        return {"name": self.name, "ok": self.ok, "witness": jsonable(self.witness)}
