import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "config.json"


class ConfigManager:
    _instance = None
    _config = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(ConfigManager, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if self._config is None:
            self.load_config()

    def load_config(self, config_path: Optional[str] = None) -> None:
        """Load configuration from file with validation."""
        path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        if not os.path.exists(path):
            raise FileNotFoundError(f"Config file not found: {path}")

        try:
            with open(path, 'r') as f:
                loaded = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Invalid JSON in config file {path}: {str(e)}")

        self._validate_config(loaded)
        self._config = loaded

    @staticmethod
    def _validate_config(loaded: Dict[str, Any]) -> None:
        """Validate required configuration fields."""
        required_sections = {
            'word_problem': ['step_cap'],
            'search': ['max_length_cap', 'memory_budget', 'workers'],
            'fuzz': ['workers', 'closure_trials', 'faithful_trials',
                     'max_word_length', 'exponent_range'],
            'logging': ['level', 'file'],
        }

        for section, fields in required_sections.items():
            if section not in loaded:
                raise ValueError(f"Missing required config section: {section}")

            for field in fields:
                if field not in loaded[section]:
                    raise ValueError(f"Missing required config field: {section}.{field}")

        if loaded['word_problem']['step_cap'] <= 0:
            raise ValueError("word_problem.step_cap must be positive")
        if loaded['search']['workers'] < 1 or loaded['fuzz']['workers'] < 1:
            raise ValueError("worker counts must be at least 1")

    def get(self, section: Optional[str] = None) -> Dict[str, Any]:
        """Get configuration or specific section."""
        if section is None:
            return self._config
        if section not in self._config:
            raise KeyError(f"Config section not found: {section}")
        return self._config[section]

    def update(self, section: str, key: str, value: Any) -> None:
        """Update a configuration value."""
        if section not in self._config:
            raise KeyError(f"Config section not found: {section}")
        self._config[section][key] = value


# Global config instance
config = ConfigManager()
