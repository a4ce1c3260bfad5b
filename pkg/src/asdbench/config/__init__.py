from .config import Settings, get_settings
from .decorators import singleton
from .experiment import apply_overrides, load_config, parse_config


__all__ = [
    "Settings",
    "apply_overrides",
    "get_settings",
    "load_config",
    "parse_config",
    "singleton",
]
