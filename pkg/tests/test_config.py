import pytest
from pathlib import Path
import pytz
from pydantic import ValidationError
from src.config import (
    LoggingConfig,
    SolverConfig,
    OracleConfig,
    DirectoryConfig,
    AppConfig,
    load_config,
)

def test_logging_config_defaults():
    """Test LoggingConfig with default values."""
    config = LoggingConfig()
    assert config.level == "INFO"
    assert config.console_level == "WARNING"
    assert config.max_bytes == 10 * 1024 * 1024  # 10MB
    assert config.backup_count == 5
    assert config.log_dir == Path("logs")

def test_logging_config_custom_values():
    """Test LoggingConfig with custom values."""
    config = LoggingConfig(
        level="debug",
        max_bytes=5 * 1024 * 1024,
        backup_count=3,
        log_dir=Path("custom_logs")
    )
    assert config.level == "DEBUG"
    assert config.max_bytes == 5 * 1024 * 1024
    assert config.backup_count == 3
    assert config.log_dir == Path("custom_logs")

def test_logging_config_validation():
    """Test LoggingConfig validation."""
    with pytest.raises(ValidationError):
        LoggingConfig(max_bytes=100)  # Too small

    with pytest.raises(ValidationError):
        LoggingConfig(backup_count=0)  # Must be >= 1

    with pytest.raises(ValidationError):
        LoggingConfig(level="LOUD")

def test_solver_config_defaults():
    """Test SolverConfig defaults."""
    config = SolverConfig()
    assert config.max_coeff == 10**12
    assert config.sqrt_search_threshold == 10**6
    assert config.check_bound is True

def test_solver_config_validation():
    """Test SolverConfig bounds."""
    with pytest.raises(ValidationError):
        SolverConfig(max_coeff=0)

    with pytest.raises(ValidationError):
        SolverConfig(sqrt_search_threshold=1)

def test_oracle_config():
    """Test OracleConfig."""
    assert OracleConfig().default_limit == 100
    with pytest.raises(ValidationError):
        OracleConfig(default_limit=0)

def test_directory_config_defaults():
    """Test DirectoryConfig with default values."""
    config = DirectoryConfig()
    assert config.output_dir == Path("output")
    assert config.schema_path.name == "report.schema.json"
    assert config.schema_path.exists()

def test_directory_config_custom():
    """Test DirectoryConfig with custom values."""
    config = DirectoryConfig(
        output_dir=Path("custom_output"),
        schema_path=Path("custom.schema.json")
    )
    assert config.output_dir == Path("custom_output")
    assert config.schema_path == Path("custom.schema.json")

def test_app_config():
    """Test AppConfig initialization and defaults."""
    config = AppConfig()

    assert isinstance(config.solver, SolverConfig)
    assert isinstance(config.oracle, OracleConfig)
    assert isinstance(config.logging, LoggingConfig)
    assert isinstance(config.directories, DirectoryConfig)
    assert config.timezone == "UTC"

def test_app_config_timezone():
    """Test AppConfig timezone property."""
    config = AppConfig(timezone="Europe/Amsterdam")

    assert isinstance(config.tz, pytz.BaseTzInfo)
    assert str(config.tz) == "Europe/Amsterdam"

def test_app_config_invalid_timezone():
    """Test AppConfig with invalid timezone."""
    with pytest.raises(ValidationError):
        AppConfig(timezone="Invalid/Timezone")

def test_load_config_from_environment(monkeypatch):
    """Test that load_config reads the environment."""
    monkeypatch.setenv("SOLVER_MAX_COEFF", "1000")
    monkeypatch.setenv("SOLVER_CHECK_BOUND", "false")
    monkeypatch.setenv("ORACLE_LIMIT", "25")
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    monkeypatch.setenv("TIMEZONE", "Europe/Amsterdam")

    config = load_config()

    assert config.solver.max_coeff == 1000
    assert config.solver.check_bound is False
    assert config.oracle.default_limit == 25
    assert config.logging.level == "WARNING"
    assert config.timezone == "Europe/Amsterdam"

def test_load_config_invalid_value(monkeypatch):
    """Test that invalid environment values are rejected."""
    monkeypatch.setenv("SOLVER_SQRT_SEARCH_THRESHOLD", "1")
    with pytest.raises(ValidationError):
        load_config()
