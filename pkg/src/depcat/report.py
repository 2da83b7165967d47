"""Structured law-check results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

# Law ids tied to a named condition.  Extra ids (typing checks, presheaf
# functoriality, counting oracles, ...) are allowed and simply sort after.
LAW_IDS = (
    "cat.typing",
    "cat.unit",
    "cat.assoc",
    "fam.typing",
    "fam1",
    "fam2",
    "weak.fam1",
    "weak.fam2",
    "cofam.typing",
    "cofam1",
    "cofam2",
    "presheaf.id",
    "presheaf.comp",
    "functor.typing",
    "functor.id",
    "functor.comp",
    "famfunctor.fam",
    "nat.typing",
    "nat.naturality",
    "famnat.triangle",
    "sigma.typing",
    "sigma.square",
    "sigma.pullback",
    "s1",
    "s2",
    "transp.sub",
    "transp.iso",
    "dep.typing",
    "dep1",
    "dep2",
    "sections.section",
    "sections.eq1",
    "sections.eq2",
    "exdo2.bij",
    "depsigma.typing",
    "depsigma.compat",
    "depsigma.section",
    "elsigma.pr0",
    "elsigma.pr1",
    "elsigma.pr2",
    "elsigma.pr3",
    "elsigma.pr4",
    "count.hom",
    "count.sigma",
    "count.dhom",
    "count.sections",
)

PASS = "pass"
FAIL = "fail"


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    # numpy scalars and anything else with an integer meaning
    try:
        return int(value)
    except (TypeError, ValueError):
        return repr(value)


@dataclass(frozen=True)
class LawEntry:
    suite: str
    law: str
    status: str
    checked: int
    witness: Any = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "law": self.law,
            "status": self.status,
            "checked": self.checked,
            "witness": _jsonable(self.witness),
            "detail": self.detail,
        }


@dataclass
class LawReport:
    """Ordered list of per-law results with a first counterexample on failure."""

    suite: str
    entries: list[LawEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[LawEntry]:
        return [e for e in self.entries if not e.passed]

    def summary(self) -> dict:
        n_fail = len(self.failures)
        return {"entries": len(self.entries), "pass": len(self.entries) - n_fail, "fail": n_fail}

    def entry(self, law: str) -> LawEntry:
        for e in self.entries:
            if e.law == law:
                return e
        raise KeyError(law)

    def status(self, law: str) -> str:
        return self.entry(law).status

    def extend(self, other: "LawReport") -> "LawReport":
        self.entries.extend(other.entries)
        return self

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "entries": [e.as_dict() for e in self.entries],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.status.upper():4} {e.suite:<10} {e.law:<18} checked={e.checked}"
            if not e.passed:
                line += f" witness={json.dumps(_jsonable(e.witness), sort_keys=True)}"
                if e.detail:
                    line += f" ({e.detail})"
            lines.append(line)
        s = self.summary()
        lines.append(f"{self.suite}: {s['pass']} passed, {s['fail']} failed")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()


class LawTally:
    """Accumulates instances of one law, keeping the first failure."""

    __slots__ = ("suite", "law", "checked", "witness", "detail", "_failed")

    def __init__(self, suite: str, law: str):
        self.suite = suite
        self.law = law
        self.checked = 0
        self.witness = None
        self.detail = ""
        self._failed = False

    def ok(self) -> None:
        self.checked += 1

    def fail(self, witness: Any, detail: str = "") -> None:
        self.checked += 1
        if not self._failed:
            self._failed = True
            self.witness = witness
            self.detail = detail

    def check(self, condition: bool, witness: Any, detail: str = "") -> bool:
        if condition:
            self.ok()
        else:
            self.fail(witness, detail)
        return condition

    @property
    def failed(self) -> bool:
        return self._failed

    def entry(self) -> LawEntry:
        status = FAIL if self._failed else PASS
        return LawEntry(self.suite, self.law, status, self.checked, self.witness, self.detail)


def make_report(suite: str, tallies) -> LawReport:
    return LawReport(suite, [t.entry() for t in tallies])
