import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """
    The outcome of a check that reports rather than raises: truthy when the check
    passed, otherwise carrying the offending items.
    """

    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    @classmethod
    def from_violations(cls, violations):
        violations = list(violations)
        return cls(not violations, violations)


def instance_random(seed, *parts):
    # String seeds hash deterministically across runs and processes.
    return random.Random(":".join(str(p) for p in (seed,) + parts))


SATISFIED = "satisfied"
VIOLATED = "violated"
ASSERTED = "asserted"


@dataclass(frozen=True)
class HypothesisItem:
    name: str
    status: str
    evidence: object = None

    @classmethod
    def check(cls, name, holds, evidence=None):
        return cls(name, SATISFIED if holds else VIOLATED, evidence)

    @property
    def holds(self):
        return self.status != VIOLATED
