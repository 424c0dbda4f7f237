import pytest
import json
import logging
import logging.handlers
import shutil
from src.logging_config import get_logger, log_dict, setup_logging, COMPONENTS, LOG_FORMAT, DATE_FORMAT
from src.config import config


def _reset_component_loggers():
    for component in COMPONENTS:
        logger = logging.getLogger(f"diophantine.{component}")
        for handler in list(logger.handlers):
            handler.close()
            logger.removeHandler(handler)


@pytest.fixture
def temp_log_dir(tmp_path):
    """Create a temporary log directory with fresh component loggers."""
    log_dir = tmp_path / "logs"
    log_dir.mkdir()
    # Temporarily override config log directory
    original_log_dir = config.logging.log_dir
    config.logging.log_dir = log_dir
    _reset_component_loggers()
    yield log_dir
    # Restore original log directory and handlers
    _reset_component_loggers()
    config.logging.log_dir = original_log_dir
    if log_dir.exists():
        shutil.rmtree(log_dir)

def test_get_logger_unknown_component():
    """Test get_logger with unknown component."""
    with pytest.raises(ValueError) as exc_info:
        get_logger("unknown_component")
    assert "Unknown component" in str(exc_info.value)
    assert str(list(COMPONENTS.keys())) in str(exc_info.value)

def test_get_logger_creates_handlers(temp_log_dir):
    """Test that get_logger creates appropriate handlers."""
    logger = get_logger("solver")

    # Should have two handlers: file and console
    assert len(logger.handlers) == 2

    file_handler = next((h for h in logger.handlers if isinstance(h, logging.handlers.RotatingFileHandler)), None)
    console_handler = next((h for h in logger.handlers if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.handlers.RotatingFileHandler)), None)

    assert file_handler is not None
    assert console_handler is not None
    assert console_handler.level == getattr(logging, config.logging.console_level)

    # Verify file handler configuration
    assert file_handler.maxBytes == config.logging.max_bytes
    assert file_handler.backupCount == config.logging.backup_count
    assert file_handler.formatter._fmt == LOG_FORMAT
    assert file_handler.formatter.datefmt == DATE_FORMAT
    assert logger.propagate is False

def test_get_logger_file_creation(temp_log_dir):
    """Test that log files are created in the correct location."""
    logger = get_logger("oracle")
    logger.info("Test message")

    log_file = temp_log_dir / "oracle.log"
    assert log_file.exists()

    content = log_file.read_text()
    assert "Test message" in content
    assert "INFO" in content
    assert "diophantine.oracle" in content

def test_get_logger_rotation(temp_log_dir):
    """Test log file rotation."""
    logger = get_logger("cli")
    log_file = temp_log_dir / "app.log"

    # Two messages past the size limit force a rollover
    large_msg = "x" * (config.logging.max_bytes + 1000)
    logger.info(large_msg)
    logger.info(large_msg)

    assert log_file.exists()
    assert (temp_log_dir / "app.log.1").exists()

def test_get_logger_multiple_calls(temp_log_dir):
    """Test that multiple calls to get_logger return the same logger instance."""
    logger1 = get_logger("residues")
    logger2 = get_logger("residues")
    assert logger1 is logger2

    # Handlers should not be duplicated
    assert len(logger1.handlers) == 2

def test_get_logger_levels(temp_log_dir):
    """Test logger level configuration."""
    for component, settings in COMPONENTS.items():
        logger = get_logger(component)
        assert logger.level == getattr(logging, settings['level'])

        log_file = temp_log_dir / settings['file']
        logger.warning(f"Test message for {component}")
        assert log_file.exists()

def test_log_message_format(temp_log_dir):
    """Test that log messages are properly formatted."""
    logger = get_logger("oracle")
    logger.info("Test log message")

    content = (temp_log_dir / "oracle.log").read_text()

    assert "Test log message" in content
    assert "diophantine.oracle" in content
    first = content.splitlines()[0].split(" - ")[0].strip()
    assert len(first) == len("2024-01-15 12:00:00")
    assert first[4] == "-" and first[10] == " " and first[13] == ":"

def test_log_dict(temp_log_dir):
    """Test that log_dict writes a JSON payload."""
    logger = get_logger("oracle")
    log_dict(logger, logging.INFO, "Search result", {"a": 3, "b": 13})

    content = (temp_log_dir / "oracle.log").read_text()
    payload = content[content.index("Search result: ") + len("Search result: "):]
    assert json.loads(payload) == {"a": 3, "b": 13}

def test_setup_logging_returns_cli_logger(temp_log_dir):
    """Test that setup_logging configures the root logger."""
    logger = setup_logging()

    assert logger.name == "diophantine.cli"
    root = logging.getLogger()
    assert len(root.handlers) == 1
    assert root.level == getattr(logging, config.logging.level)

def test_get_logger_with_foreign_handler(temp_log_dir):
    """Test that a handler added elsewhere does not stop the file handler."""
    logging.getLogger("diophantine.oracle").addHandler(logging.NullHandler())
    logger = get_logger("oracle")
    logger.info("Still written")

    assert any(isinstance(h, logging.handlers.RotatingFileHandler) for h in logger.handlers)
    assert "Still written" in (temp_log_dir / "oracle.log").read_text()
    assert len(get_logger("oracle").handlers) == 3
