import os
import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Any
import json
from src.config import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Component loggers, one rotating file each
COMPONENTS = {
    'solver': {'file': 'solver.log', 'level': config.logging.level},
    'residues': {'file': 'residues.log', 'level': config.logging.level},
    'oracle': {'file': 'oracle.log', 'level': 'INFO'},
    'cli': {'file': 'app.log', 'level': 'INFO'},
}


def setup_logging() -> logging.Logger:
    """Set up root logging for the command line and return the CLI logger."""
    os.makedirs(config.logging.log_dir, exist_ok=True)

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(config.logging.console_level)

    root_logger = logging.getLogger()
    root_logger.setLevel(config.logging.level)
    # Clear any existing handlers
    root_logger.handlers.clear()
    root_logger.addHandler(console_handler)

    return get_logger('cli')


def get_logger(component: str) -> logging.Logger:
    """Get the logger for a specific component, attaching its handlers once."""
    if component not in COMPONENTS:
        raise ValueError(f"Unknown component '{component}'. Valid components: {list(COMPONENTS.keys())}")

    settings = COMPONENTS[component]
    logger = logging.getLogger(f"diophantine.{component}")
    if any(isinstance(h, RotatingFileHandler) for h in logger.handlers):
        return logger

    log_dir = Path(config.logging.log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    file_handler = RotatingFileHandler(
        log_dir / settings['file'],
        maxBytes=config.logging.max_bytes,
        backupCount=config.logging.backup_count,
        encoding='utf-8',
        delay=True
    )
    file_handler.setFormatter(formatter)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(config.logging.console_level)

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)
    logger.setLevel(getattr(logging, settings['level']))
    logger.propagate = False  # Prevent propagation to root logger
    return logger


def log_dict(logger: logging.Logger, level: int, message: str, data: Dict[str, Any]) -> None:
    """Log a dictionary with proper formatting."""
    logger.log(level, f"{message}: {json.dumps(data, indent=2)}")
