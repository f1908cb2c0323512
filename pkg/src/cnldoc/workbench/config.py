"""Session configuration: documented key-value text (INI sections).

    [paths]
    kb = docs/project.cnl
    source-roots = src tools/scripts

    [comments]
    .py = #
    .java = //
    .st = "

    [service]
    port = 8799

    [bench]
    add-budget = 2.0
    check-budget = 10.0
    load-budget = 120.0
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field

from ..errors import ConfigError

DEFAULT_PORT = 8799
DEFAULT_COMMENT_PREFIXES = {".py": ["#"], ".java": ["//"], ".st": ['"'],
                            ".ts": ["//"], ".js": ["//"], ".c": ["//"],
                            ".cpp": ["//"], ".rs": ["//"]}


@dataclass
class SessionConfig:
    kb_path: str
    source_roots: list = field(default_factory=list)
    comment_prefixes: dict = field(default_factory=lambda: dict(
        DEFAULT_COMMENT_PREFIXES))
    port: int = DEFAULT_PORT
    add_budget: float = 2.0
    check_budget: float = 10.0
    load_budget: float = 120.0
    base_dir: str = "."

    def resolve(self, path) -> str:
        return os.path.normpath(os.path.join(self.base_dir, path))

    @property
    def kb_file(self) -> str:
        return self.resolve(self.kb_path)

    def validate(self):
        if not os.path.exists(self.kb_file):
            raise ConfigError("kb file does not exist: %s" % self.kb_file)


def load_config(path) -> SessionConfig:
    parser = configparser.ConfigParser()
    read = parser.read(path, encoding="utf-8")
    if not read:
        raise ConfigError("cannot read config file %s" % path)
    if not parser.has_option("paths", "kb"):
        raise ConfigError("%s: missing [paths] kb entry" % path)
    config = SessionConfig(kb_path=parser.get("paths", "kb"),
                           base_dir=os.path.dirname(os.path.abspath(path)))
    roots = parser.get("paths", "source-roots", fallback="")
    config.source_roots = roots.split()
    if parser.has_section("comments"):
        for ext, prefixes in parser.items("comments"):
            key = ext if ext.startswith(".") else "." + ext
            config.comment_prefixes[key] = prefixes.split()
    config.port = parser.getint("service", "port", fallback=DEFAULT_PORT)
    config.add_budget = parser.getfloat("bench", "add-budget", fallback=2.0)
    config.check_budget = parser.getfloat("bench", "check-budget",
                                          fallback=10.0)
    config.load_budget = parser.getfloat("bench", "load-budget",
                                         fallback=120.0)
    config.validate()
    return config


def config_for_kb(kb_path) -> SessionConfig:
    """Implicit config when the CLI is pointed straight at a kb file."""
    config = SessionConfig(kb_path=os.path.basename(kb_path),
                           base_dir=os.path.dirname(os.path.abspath(kb_path)))
    config.validate()
    return config
