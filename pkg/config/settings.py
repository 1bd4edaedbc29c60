"""
Configuration settings for the almost contact B-metric toolkit
"""
from pathlib import Path
from typing import List

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application configuration"""

    # Project paths
    BASE_DIR: Path = Path(__file__).parent.parent
    LOGS_DIR: Path = BASE_DIR / "logs"

    # Logging configuration
    LOG_LEVEL: str = "INFO"  # DEBUG shows per-component details
    LOG_FILE: str = "acbm.log"  # File name under LOGS_DIR
    LOG_TO_FILE: bool = False  # Also log to LOGS_DIR / LOG_FILE

    # Report configuration
    OUTPUT_FORMAT: str = "text"  # Options: "text", "machine"

    # Processing configuration
    NUM_WORKERS: int = 4  # Threads used by the check suite
    SHOW_PROGRESS: bool = False  # tqdm progress bar while checks run

    # Family configuration
    FAMILY_PARAMS: List[str] = ["l1", "l2", "l3", "l4", "m1", "m2"]  # λ1..λ4, μ1, μ2

    # Spec file export
    LIST_SEPARATOR: str = ", "  # Separator for eta and metric lists

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "ACBM_"

    def create_directories(self):
        """Create necessary directories if they don't exist"""
        self.LOGS_DIR.mkdir(parents=True, exist_ok=True)


# Global settings instance
settings = Settings()
