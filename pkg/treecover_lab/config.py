"""Configuration management for treecover-lab."""

import yaml
from pathlib import Path
from typing import Any, Dict, List, Optional
from dataclasses import dataclass, field

DEFAULT_CONFIG_FILE = "treecover-lab.yaml"
DEFAULT_N_MAX = 7


@dataclass
class BudgetConfig:
    """Size limits for the exact solvers and the enumerator."""

    max_vertices: int = 64
    exact_cover_max: int = 14
    path_cover_max: int = 14
    forcing_max: int = 12
    treewidth_max: int = 14
    outerplanar_max: int = 16
    enumeration_max: int = 9


@dataclass
class HarnessConfig:
    """Configuration for the verify and scan commands."""

    workers: int = 1
    default_n_max: Optional[int] = None
    theorem_n_max: Dict[str, int] = field(default_factory=dict)
    theorems: Optional[List[str]] = None
    k_tree_seeds: int = 100
    out: Optional[str] = None
    summary: Optional[str] = None

    def n_max_for(self, theorem_id: str, fallback: Optional[int] = None) -> int:
        """Per-theorem override, else ``default_n_max``, else the theorem's own default."""
        if theorem_id in self.theorem_n_max:
            return self.theorem_n_max[theorem_id]
        if self.default_n_max is not None:
            return self.default_n_max
        return fallback if fallback is not None else DEFAULT_N_MAX


@dataclass
class LabConfig:
    """Main configuration containing budget and harness configs."""

    budgets: BudgetConfig = field(default_factory=BudgetConfig)
    harness: HarnessConfig = field(default_factory=HarnessConfig)


class ConfigLoader:
    """Loads and validates YAML configuration files."""

    @staticmethod
    def load_config(config_path: Optional[str] = None) -> LabConfig:
        """Load configuration from YAML file.

        Without a path, ``treecover-lab.yaml`` in the working directory is used
        when present and the defaults otherwise.
        """
        if config_path is None:
            if not Path(DEFAULT_CONFIG_FILE).exists():
                return LabConfig()
            config_path = DEFAULT_CONFIG_FILE

        config_file = Path(config_path)
        if not config_file.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_file, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f)

        return ConfigLoader._parse_config(config_data or {})

    @staticmethod
    def _parse_config(config_data: Dict[str, Any]) -> LabConfig:
        """Parse configuration data into LabConfig."""
        if not isinstance(config_data, dict):
            raise ValueError("Configuration file must contain a mapping at the top level")

        budgets = BudgetConfig()
        if "budgets" in config_data:
            budget_data = config_data["budgets"] or {}
            defaults = BudgetConfig()
            budgets = BudgetConfig(
                max_vertices=budget_data.get("max_vertices", defaults.max_vertices),
                exact_cover_max=budget_data.get("exact_cover_max", defaults.exact_cover_max),
                path_cover_max=budget_data.get("path_cover_max", defaults.path_cover_max),
                forcing_max=budget_data.get("forcing_max", defaults.forcing_max),
                treewidth_max=budget_data.get("treewidth_max", defaults.treewidth_max),
                outerplanar_max=budget_data.get("outerplanar_max", defaults.outerplanar_max),
                enumeration_max=budget_data.get("enumeration_max", defaults.enumeration_max),
            )
            if budgets.max_vertices > 64:
                raise ValueError("budgets.max_vertices cannot exceed 64")

        harness = HarnessConfig()
        if "harness" in config_data:
            harness_data = config_data["harness"] or {}

            # Handle theorem selection
            theorems = ConfigLoader._parse_list(harness_data.get("theorems"))

            theorem_n_max = harness_data.get("theorem_n_max") or {}
            if not isinstance(theorem_n_max, dict):
                raise ValueError("harness.theorem_n_max must map theorem ids to integers")

            harness = HarnessConfig(
                workers=harness_data.get("workers", 1),
                default_n_max=harness_data.get("default_n_max"),
                theorem_n_max={str(k): int(v) for k, v in theorem_n_max.items()},
                theorems=theorems,
                k_tree_seeds=harness_data.get("k_tree_seeds", 100),
                out=harness_data.get("out"),
                summary=harness_data.get("summary"),
            )
            if harness.workers < 1:
                raise ValueError("harness.workers must be at least 1")

        return LabConfig(budgets=budgets, harness=harness)

    @staticmethod
    def _parse_list(value: Any) -> Optional[List[str]]:
        """Accept a YAML list or a comma-separated string."""
        if value is None:
            return None
        if isinstance(value, str):
            return [s.strip() for s in value.split(",") if s.strip()]
        return [str(s).strip() for s in value]
