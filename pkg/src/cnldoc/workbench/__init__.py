"""Workbench: persistence, CLI, and HTTP service over the engine."""

from .config import SessionConfig, config_for_kb, load_config
from .kbfile import KbFile
from .session import Session, load

__all__ = ["KbFile", "Session", "SessionConfig", "config_for_kb", "load",
           "load_config"]
