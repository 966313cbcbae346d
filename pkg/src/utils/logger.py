"""Logging infrastructure with graph context."""
import logging
import sys
import threading
from pathlib import Path
from logging.handlers import RotatingFileHandler
from typing import Optional


class GraphContextFilter(logging.Filter):
    """Add the id of the graph being processed to log records."""

    def __init__(self):
        super().__init__()
        self._local = threading.local()

    @property
    def graph_id(self) -> Optional[str]:
        return getattr(self._local, "graph_id", None)

    @graph_id.setter
    def graph_id(self, value: Optional[str]) -> None:
        self._local.graph_id = value

    def filter(self, record):
        """Add graph_id to record."""
        record.graph_id = self.graph_id or "system"
        return True


class CheegerLogger:
    """Centralized logging manager."""

    FORMAT = "%(asctime)s [%(levelname)s] [graph:%(graph_id)s] %(message)s"

    def __init__(self, log_level: str = "INFO"):
        self.graph_filter = GraphContextFilter()
        self.formatter = logging.Formatter(self.FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

        self.logger = logging.getLogger("cheeger")
        self.logger.setLevel(getattr(logging, log_level.upper()))
        self.logger.propagate = False

        # Remove existing handlers
        self.logger.handlers.clear()

        # Console handler; stdout carries command results
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.DEBUG)
        console_handler.setFormatter(self.formatter)
        console_handler.addFilter(self.graph_filter)
        self.logger.addHandler(console_handler)

    def add_file_handler(self, log_file: Path, max_file_size_mb: int = 10, backup_count: int = 5) -> None:
        """Mirror log output into a rotating file."""
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_file_size_mb * 1024 * 1024,
            backupCount=backup_count,
            encoding="utf-8"
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(self.formatter)
        file_handler.addFilter(self.graph_filter)
        self.logger.addHandler(file_handler)

    def set_level(self, log_level: str) -> None:
        self.logger.setLevel(getattr(logging, log_level.upper()))

    def set_graph_context(self, graph_id: Optional[str]):
        """Set current graph context for logging (per thread)."""
        self.graph_filter.graph_id = graph_id

    def get_logger(self) -> logging.Logger:
        """Get the configured logger."""
        return self.logger


# Global logger instance
_logger_instance: Optional[CheegerLogger] = None


def _instance(log_level: str = "INFO") -> CheegerLogger:
    global _logger_instance
    if _logger_instance is None:
        _logger_instance = CheegerLogger(log_level)
    return _logger_instance


def get_logger(log_level: str = "INFO") -> logging.Logger:
    """Get or create global logger instance."""
    return _instance(log_level).get_logger()


def configure_logging(
    log_level: str,
    log_file: Optional[str] = None,
    max_file_size_mb: int = 10,
    backup_count: int = 5
) -> logging.Logger:
    """Apply level and optional file output from settings."""
    manager = _instance(log_level)
    manager.set_level(log_level)
    if log_file:
        manager.add_file_handler(Path(log_file), max_file_size_mb, backup_count)
    return manager.get_logger()


def set_graph_context(graph_id: Optional[str]):
    """Set graph context for logging."""
    _instance().set_graph_context(graph_id)
