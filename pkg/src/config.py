from pydantic import BaseModel, Field, field_validator
from typing import Any
import os
from pathlib import Path
import pytz
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class SolverConfig(BaseModel):
    """Descent solver configuration."""
    max_coeff: int = Field(default=10**12, ge=1)
    sqrt_search_threshold: int = Field(default=10**6, ge=2)
    check_bound: bool = Field(default=True)


class OracleConfig(BaseModel):
    """Brute-force oracle configuration."""
    default_limit: int = Field(default=100, ge=1)


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: str = Field(default="INFO")
    console_level: str = Field(default="WARNING")
    max_bytes: int = Field(default=10 * 1024 * 1024, ge=1024)  # 10MB
    backup_count: int = Field(default=5, ge=1)
    log_dir: Path = Field(default=Path("logs"))

    @field_validator("level", "console_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {value}")
        return value


class DirectoryConfig(BaseModel):
    """Directory configuration."""
    output_dir: Path = Field(default=Path("output"))
    schema_path: Path = Field(default=PROJECT_ROOT / "schemas" / "report.schema.json")


class AppConfig(BaseModel):
    """Main application configuration."""
    solver: SolverConfig = Field(default_factory=SolverConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    directories: DirectoryConfig = Field(default_factory=DirectoryConfig)
    timezone: str = Field(default="UTC")

    @field_validator("timezone")
    @classmethod
    def _known_timezone(cls, value: str) -> str:
        try:
            pytz.timezone(value)
        except pytz.UnknownTimeZoneError as e:
            raise ValueError(f"Unknown timezone: {value}") from e
        return value

    @property
    def tz(self) -> Any:
        """Get the timezone object."""
        return pytz.timezone(self.timezone)


def load_config() -> AppConfig:
    """Load and validate configuration from environment variables."""
    solver_config = SolverConfig(
        max_coeff=int(os.getenv("SOLVER_MAX_COEFF", str(10**12))),
        sqrt_search_threshold=int(os.getenv("SOLVER_SQRT_SEARCH_THRESHOLD", str(10**6))),
        check_bound=os.getenv("SOLVER_CHECK_BOUND", "true").lower() == "true"
    )

    oracle_config = OracleConfig(
        default_limit=int(os.getenv("ORACLE_LIMIT", "100"))
    )

    logging_config = LoggingConfig(
        level=os.getenv("LOG_LEVEL", "INFO"),
        console_level=os.getenv("LOG_CONSOLE_LEVEL", "WARNING"),
        log_dir=Path(os.getenv("LOG_DIR", "logs"))
    )

    directory_config = DirectoryConfig(
        output_dir=Path(os.getenv("OUTPUT_DIR", "output"))
    )

    return AppConfig(
        solver=solver_config,
        oracle=oracle_config,
        logging=logging_config,
        directories=directory_config,
        timezone=os.getenv("TIMEZONE", "UTC")
    )

# Create a global config instance
config = load_config()
