"""The analysis report and its JSON, text and CSV renderings.

JSON keeps the field order of :class:`AnalysisReport`.  The text form is an
aligned two-column listing of the same content under dotted keys, and both
forms parse back to an equal report.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, List, Optional

import pandas as pd

from ..analysis.structure import BalanceStructure
from ..utils.errors import InputError

logger = logging.getLogger(__name__)


@dataclass
class ConstantSetReport:
    dimension: int
    basis: List[str]


@dataclass
class BalancingReport:
    number: int
    coset_representatives: List[str]
    method: str
    enumerated_members: Optional[List[str]] = None


@dataclass
class FixingSetReport:
    dimension: int
    basis: List[str]


@dataclass
class QuotientReport:
    f: int
    representatives: List[str]


@dataclass
class CheckReport:
    name: str
    predicted: int
    actual: int
    matches: bool


@dataclass
class AnalysisReport:
    """Everything ``analyze`` and ``oracle`` print about one input."""

    n: int
    cardinality: int
    total_multiplicity: int
    rank: int
    classification: str
    constant_set: ConstantSetReport
    balancing: BalancingReport
    fixing_set: Optional[FixingSetReport]
    fully_balanced: bool
    quotient: Optional[QuotientReport]
    closed_form_checks: List[CheckReport] = field(default_factory=list)
    indices: Optional[Dict[str, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnalysisReport":
        try:
            return cls(
                n=data["n"],
                cardinality=data["cardinality"],
                total_multiplicity=data["total_multiplicity"],
                rank=data["rank"],
                classification=data["classification"],
                constant_set=ConstantSetReport(**data["constant_set"]),
                balancing=BalancingReport(**data["balancing"]),
                fixing_set=(
                    FixingSetReport(**data["fixing_set"]) if data.get("fixing_set") else None
                ),
                fully_balanced=data["fully_balanced"],
                quotient=QuotientReport(**data["quotient"]) if data.get("quotient") else None,
                closed_form_checks=[CheckReport(**c) for c in data.get("closed_form_checks", [])],
                indices=data.get("indices"),
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed report: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed report: {exc}") from exc
        return cls.from_dict(data)

    def to_text(self) -> str:
        flat = _flatten(self.to_dict())
        series = pd.Series({key: _render(value) for key, value in flat.items()}, dtype=object)
        # Long vector lists must not be shortened with "..."
        with pd.option_context("display.max_colwidth", None):
            return series.to_string() + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AnalysisReport":
        flat: Dict[str, str] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, value = line.strip().partition(" ")
            flat[key] = value.strip()
        return cls.from_dict(_unflatten(flat))

    def agrees_with(self, other: "AnalysisReport") -> bool:
        """Equality that ignores which method produced the balancing cosets."""
        mine = replace(self, balancing=replace(self.balancing, method=""))
        theirs = replace(other, balancing=replace(other.balancing, method=""))
        return mine == theirs


# Text layout ----------------------------------------------------------------

_INT_KEYS = {
    "n", "cardinality", "total_multiplicity", "rank", "constant_set.dimension",
    "balancing.number", "fixing_set.dimension", "quotient.f",
}
_LIST_KEYS = {
    "constant_set.basis", "balancing.coset_representatives",
    "balancing.enumerated_members", "fixing_set.basis", "quotient.representatives",
}


def _flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            flat.update(_flatten(value, f"{name}."))
        elif key == "closed_form_checks":
            flat[name] = len(value)
            for i, check in enumerate(value):
                flat.update(_flatten(check, f"{name}.{i}."))
        else:
            flat[name] = value
    return flat


def _render(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(value) if value else "-"
    if isinstance(value, dict):
        return "-"
    return str(value)


def _parse_value(key: str, text: str) -> Any:
    if text == "null":
        return None
    if key == "indices":
        return {}
    if key in _LIST_KEYS:
        return [] if text == "-" else text.split()
    if text in ("true", "false"):
        return text == "true"
    if key in _INT_KEYS or key.startswith("indices.") or key.endswith((".predicted", ".actual")):
        return int(text)
    return text


def _unflatten(flat: Dict[str, str]) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    checks: Dict[int, Dict[str, Any]] = {}
    for key, text in flat.items():
        value = _parse_value(key, text)
        parts = key.split(".")
        if parts[0] == "closed_form_checks":
            if len(parts) == 3:
                checks.setdefault(int(parts[1]), {})[parts[2]] = value
            continue
        node = data
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = value
    data["closed_form_checks"] = [checks[i] for i in sorted(checks)]
    return data


# CSV export -----------------------------------------------------------------


def write_frame(frame: pd.DataFrame, directory: str, name: str) -> str:
    """Write ``frame`` to ``<directory>/<name>``, creating the folder on demand."""
    path = os.path.join(directory, name)
    try:
        os.makedirs(directory, exist_ok=True)
        frame.to_csv(path, index=False)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc
    logger.info("wrote %d rows to %s", len(frame), path)
    return path


def write_coset_table(structure: BalanceStructure, directory: str, stem: str) -> str:
    """Write the balancing cosets of ``structure`` to ``<directory>/<stem>_cosets.csv``."""
    return write_frame(structure.to_frame(), directory, f"{stem}_cosets.csv")
