"""Configuration management utilities"""

import json
import logging
from copy import deepcopy
from dataclasses import dataclass
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    """Desk-scale guardrails shared by every enumeration.

    Exceeding any bound raises BudgetExceededError; results are never truncated.
    """

    max_total_order: int = 200
    max_hom_search: int = 10_000_000
    max_sections: int = 500
    max_cochain_rank: int = 1500

    @classmethod
    def from_config(cls, config: dict[str, Any] | None) -> "SearchBudget":
        """Build a budget from the ``budgets`` section of a configuration."""

        budgets = (config or {}).get("budgets", {}) or {}
        defaults = cls()
        return cls(
            max_total_order=int(budgets.get("max_total_order", defaults.max_total_order)),
            max_hom_search=int(budgets.get("max_hom_search", defaults.max_hom_search)),
            max_sections=int(budgets.get("max_sections", defaults.max_sections)),
            max_cochain_rank=int(budgets.get("max_cochain_rank", defaults.max_cochain_rank)),
        )


DEFAULT_BUDGET = SearchBudget()


class ConfigManager:
    """Manages configuration and presets"""

    def __init__(self, presets_dir: str = "presets"):
        """
        Initialize configuration manager.

        Args:
            presets_dir: Directory containing preset files
        """
        self.presets_dir = Path(presets_dir)

    def load_preset(self, name: str) -> dict[str, Any] | None:
        """
        Load a preset configuration.

        Args:
            name: Name of the preset

        Returns:
            Preset merged over the defaults, or None if missing or unreadable
        """
        preset_path = self.presets_dir / f"{name}.json"
        if not preset_path.exists():
            logger.warning(f"Preset '{name}' not found at {preset_path}")
            return None

        try:
            with open(preset_path, encoding="utf-8") as f:
                preset = self._merge_config_with_defaults(json.load(f))
            logger.info(f"Loaded preset: {name}")
            return preset
        except Exception as e:
            logger.error(f"Failed to load preset '{name}': {e}")
            return None

    def list_presets(self) -> list:
        """
        List all available presets.

        Returns:
            Sorted list of preset names
        """
        presets = [p.stem for p in self.presets_dir.glob("*.json")]
        logger.info(f"Found {len(presets)} presets")
        return sorted(presets)

    def get_default_config(self) -> dict[str, Any]:
        """
        Get the default configuration for budgets, validation and sweeps.

        Returns:
            Dictionary containing the default configuration
        """
        return {
            "budgets": {
                "max_total_order": 200,
                "max_hom_search": 10_000_000,
                "max_sections": 500,
                "max_cochain_rank": 1500,
            },
            "validation": {
                "exhaustive_associativity_order": 64,
                "random_triples": 10_000,
                "seed": 0,
            },
            "sweep": {
                "kernels": ["C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8", "A4"],
                "twisting_kernels": ["S4"],  # twisting suites only
                "quotients": ["C2", "C3", "C4", "V4", "S3"],
                "max_action_kernel_order": 8,
                "max_descent_total_order": 48,
                "twisting_max_kernel_order": 24,
                "twisting_max_quotient_order": 8,
                "brute_force_hom_limit": 2_000_000,
                "subgroup_scan_order": 24,
                "abelian_only": False,
            },
            "report": {
                "indent": 2,
                "include_timings": False,
            },
            "logging": {
                "level": "INFO",
            },
        }

    def apply_overrides(self, config: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
        """
        Apply command-line style overrides, skipping None values.

        Args:
            config: Base configuration
            overrides: Nested dictionary of overrides

        Returns:
            Merged configuration
        """
        cleaned = self._drop_none(overrides)
        return self._deep_merge_dicts(config, cleaned)

    def _drop_none(self, values: dict[str, Any]) -> dict[str, Any]:
        cleaned: dict[str, Any] = {}
        for key, value in (values or {}).items():
            if isinstance(value, dict):
                nested = self._drop_none(value)
                if nested:
                    cleaned[key] = nested
            elif value is not None:
                cleaned[key] = value
        return cleaned

    def _merge_config_with_defaults(self, config: dict[str, Any] | None) -> dict[str, Any]:
        base = self.get_default_config()
        return self._deep_merge_dicts(base, config or {})

    def _deep_merge_dicts(self, base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
        merged = deepcopy(base)
        for key, value in (overrides or {}).items():
            if isinstance(merged.get(key), dict) and isinstance(value, dict):
                merged[key] = self._deep_merge_dicts(merged.get(key, {}), value)
            else:
                merged[key] = value
        return merged
