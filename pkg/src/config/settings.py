"""Application settings loader from YAML configuration."""
import os
import yaml
from pathlib import Path
from typing import Optional, Tuple
from dataclasses import dataclass

from utils.exceptions import ConfigError


@dataclass
class AppSettings:
    """Application-wide settings loaded from config.yaml."""

    # App info
    app_name: str
    app_version: str

    # Logging
    log_level: str
    log_file: str
    log_max_file_size_mb: int
    log_backup_count: int

    # Discrete side
    discrete_tolerance: float
    cheeger_max_vertices: int
    jacobi_tolerance: float
    jacobi_max_sweeps: int
    jacobi_max_order: int
    zero_tolerance: float
    subset_chunk: int

    # Metric side
    metric_max_edges: int
    max_cuts_per_edge: int
    grid_max_edges: int
    grid_max_n: int

    # FEM
    fem_target_rel_tol: float
    fem_dof_cap: int
    fem_initial_elements: int
    fem_dense_dof_limit: int
    bound_rel_tol: float

    # Ensembles
    discrete_count: int
    metric_count: int
    discrete_min_vertices: int
    discrete_max_vertices: int
    discrete_p_range: Tuple[float, float]
    metric_length_range: Tuple[float, float]
    ensemble_max_edges: int
    retry_cap: int

    # Processing
    max_workers: int

    # Reports
    significant_digits: int

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "AppSettings":
        """Load settings from YAML file, then apply environment overrides."""
        if config_path is None:
            env_path = os.getenv("CHEEGER_CONFIG")
            if env_path:
                config_path = Path(env_path)
            else:
                # Default to config.yaml in project root
                config_path = Path(__file__).parent.parent.parent / "config.yaml"

        if not config_path.exists():
            raise ConfigError(f"Configuration file not found: {config_path}")

        with open(config_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)

        try:
            settings = cls(
                app_name=config["app"]["name"],
                app_version=config["app"]["version"],
                log_level=config["logging"]["level"],
                log_file=config["logging"].get("file") or "",
                log_max_file_size_mb=config["logging"]["max_file_size_mb"],
                log_backup_count=config["logging"]["backup_count"],
                discrete_tolerance=float(config["discrete"]["tolerance"]),
                cheeger_max_vertices=config["discrete"]["cheeger_max_vertices"],
                jacobi_tolerance=float(config["discrete"]["jacobi_tolerance"]),
                jacobi_max_sweeps=config["discrete"]["jacobi_max_sweeps"],
                jacobi_max_order=config["discrete"]["jacobi_max_order"],
                zero_tolerance=float(config["discrete"]["zero_tolerance"]),
                subset_chunk=config["discrete"]["subset_chunk"],
                metric_max_edges=config["metric"]["max_edges"],
                max_cuts_per_edge=config["metric"]["max_cuts_per_edge"],
                grid_max_edges=config["metric"]["grid_max_edges"],
                grid_max_n=config["metric"]["grid_max_n"],
                fem_target_rel_tol=float(config["fem"]["target_rel_tol"]),
                fem_dof_cap=config["fem"]["dof_cap"],
                fem_initial_elements=config["fem"]["initial_elements"],
                fem_dense_dof_limit=config["fem"]["dense_dof_limit"],
                bound_rel_tol=float(config["fem"]["bound_rel_tol"]),
                discrete_count=config["ensembles"]["discrete_count"],
                metric_count=config["ensembles"]["metric_count"],
                discrete_min_vertices=config["ensembles"]["discrete_min_vertices"],
                discrete_max_vertices=config["ensembles"]["discrete_max_vertices"],
                discrete_p_range=tuple(config["ensembles"]["discrete_p_range"]),
                metric_length_range=tuple(config["ensembles"]["metric_length_range"]),
                ensemble_max_edges=config["ensembles"]["metric_max_edges"],
                retry_cap=config["ensembles"]["retry_cap"],
                max_workers=config["processing"]["max_workers"],
                significant_digits=config["reports"]["significant_digits"],
            )
        except (KeyError, TypeError) as e:
            raise ConfigError(f"Malformed configuration {config_path}: missing {e}")

        settings._apply_env_overrides()
        return settings

    def _apply_env_overrides(self) -> None:
        """Apply CHEEGER_* environment variables."""
        dof_cap = os.getenv("CHEEGER_DOF_CAP")
        if dof_cap:
            try:
                self.fem_dof_cap = int(dof_cap)
            except ValueError:
                raise ConfigError(f"CHEEGER_DOF_CAP must be an integer, got {dof_cap!r}")
            if self.fem_dof_cap < 3:
                raise ConfigError("CHEEGER_DOF_CAP must be at least 3")

        log_level = os.getenv("CHEEGER_LOG_LEVEL")
        if log_level:
            self.log_level = log_level.upper()


# Global settings instance
_settings: Optional[AppSettings] = None


def get_settings() -> AppSettings:
    """Get or create global settings instance."""
    global _settings
    if _settings is None:
        _settings = AppSettings.load()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next get_settings() reloads them."""
    global _settings
    _settings = None
