import copy

import pytest
from hypothesis import HealthCheck, settings

from src.config import config

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def restore_config():
    """Undo config.update calls made by a test."""
    saved = copy.deepcopy(config.get())
    yield config
    for section, values in saved.items():
        for key, value in values.items():
            config.update(section, key, value)
