"""Class-level defect risk baselines, severity bands, and explanation tooling.

Thin wrapper over the compiled core. The *_json entry points below return
parsed documents; the raw string variants live on the extension module.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from riskexplain._riskexplain import (
    BackendError,
    InputError,
    SelectionError,
    classify_severity,
    sigma_distance,
    version,
)
from riskexplain import _riskexplain

__all__ = [
    "BackendError",
    "InputError",
    "SelectionError",
    "baseline_stats",
    "classify_severity",
    "explain_class",
    "project_report",
    "prompt_text",
    "sigma_distance",
    "validate_explanation",
    "version",
]


def baseline_stats(dataset_path: str, project_name: str = "") -> list[dict[str, Any]]:
    """Per-metric baseline rows: project, metric, acronym, mean, std_dev, count, min, max."""
    return json.loads(_riskexplain.stats_json(dataset_path, project_name))


def prompt_text(
    dataset_path: str,
    class_pattern: str,
    project_name: str = "",
    project_label: str = "",
    include_baseline: bool = True,
) -> str:
    """Rendered explanation prompt for the first class matching the pattern."""
    return _riskexplain.prompt_text(
        dataset_path, class_pattern, project_name, project_label, include_baseline
    )


def explain_class(
    dataset_path: str,
    class_pattern: str,
    project_name: str = "",
    metrics_only: bool = False,
) -> dict[str, Any]:
    """Class report for the first match, generated with the offline backend."""
    return json.loads(
        _riskexplain.explain_json(dataset_path, class_pattern, project_name, metrics_only)
    )


def project_report(
    dataset_path: str,
    project_name: str = "",
    mode: str = "explained",
    class_pattern: str = "",
    top_k: int = 0,
) -> dict[str, Any]:
    """Full project report over the selected classes, generated offline."""
    return json.loads(
        _riskexplain.batch_json(dataset_path, project_name, mode, class_pattern, top_k)
    )


def validate_explanation(explanation_text: str, profile: dict[str, Any]) -> dict[str, Any]:
    """Taxonomy coverage of an explanation against a class profile document."""
    return json.loads(_riskexplain.validate_text(explanation_text, json.dumps(profile)))
