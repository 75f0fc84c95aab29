"""Machine-readable experiment reports.

Every CLI invocation emits one report.  For a fixed (problem, parameters,
seed, tool_version) the result payload is identical run to run; only
runtime_ms may differ.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__

VERDICTS = (
    "verified",          # a stated property held on the checked range
    "refuted",           # a conjecture-level counterexample, with certificate
    "refuted-instance",  # a single queried instance answered negatively
    "found",             # a searched-for object was found
    "not-found",         # search exhausted its budget without a find
    "report-only",       # measurement with no verdict attached
)


@dataclass
class ExperimentReport:
    problem: str
    parameters: dict[str, Any]
    result: dict[str, Any]
    verdict: str
    seed: Any = 0
    runtime_ms: int = 0
    tool_version: str = __version__

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=_jsonify)


def _jsonify(obj: Any):
    from fractions import Fraction

    if isinstance(obj, Fraction):
        return {"numerator": obj.numerator, "denominator": obj.denominator}
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"not JSON serializable: {type(obj)}")
