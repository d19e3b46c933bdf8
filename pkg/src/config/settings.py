"""Application settings and configuration management."""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load .env file
load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Settings:
    """Application settings loaded from environment variables."""

    def __init__(self):
        # Spectral kernel
        self.default_k: int = int(os.getenv("DEFAULT_K", "100"))
        self.svd_tolerance: float = float(os.getenv("SVD_TOLERANCE", "1e-10"))
        max_iter = os.getenv("SVD_MAX_ITER")
        self.svd_max_iter: Optional[int] = int(max_iter) if max_iter else None
        self.dense_svd_limit: int = int(os.getenv("DENSE_SVD_LIMIT", "1000"))

        # Elbow fit
        self.variance_floor: float = float(os.getenv("VARIANCE_FLOOR", "1e-12"))

        # Experiments / bootstrap
        self.threads: int = int(os.getenv("THREADS", "1"))
        self.bootstrap_replicates: int = int(os.getenv("BOOTSTRAP_REPLICATES", "1000"))
        self.master_seed: int = int(os.getenv("MASTER_SEED", "0"))
        self.gc_warn_fraction: float = float(os.getenv("GC_WARN_FRACTION", "0.5"))

        # Application Configuration
        self.environment: str = os.getenv("ENVIRONMENT", "development")
        self.log_level: str = os.getenv("LOG_LEVEL", "INFO")
        self.log_to_file: bool = _flag("LOG_TO_FILE", "true")

        # Paths
        self.log_dir: Path = Path(os.getenv("LOG_DIR", "logs"))

    def as_dict(self) -> dict[str, object]:
        """Resolved configuration, in a stable order, for run headers."""
        return {
            "default_k": self.default_k,
            "svd_tolerance": self.svd_tolerance,
            "svd_max_iter": self.svd_max_iter,
            "dense_svd_limit": self.dense_svd_limit,
            "variance_floor": self.variance_floor,
            "threads": self.threads,
            "bootstrap_replicates": self.bootstrap_replicates,
            "master_seed": self.master_seed,
            "gc_warn_fraction": self.gc_warn_fraction,
            "environment": self.environment,
            "log_level": self.log_level,
            "log_to_file": self.log_to_file,
            "log_dir": str(self.log_dir),
        }


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get the global settings instance (singleton pattern)."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Forget the cached instance so the next access re-reads the environment."""
    global _settings
    _settings = None
