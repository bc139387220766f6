"""JSON helpers for series and plan files."""
from __future__ import annotations

import json
from pathlib import Path

from ..errors import ValidationError
from .plan import CompiledPlan
from .series import FourierSeries


def _load(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON ({exc})") from exc


def load_series(path) -> FourierSeries:
    return FourierSeries.from_dict(_load(path))


def load_plan(path) -> CompiledPlan:
    return CompiledPlan.from_dict(_load(path))


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj.to_dict(), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
