"""Bundled example sources, stored as JSON substitution files."""

import json
from importlib import resources

from ..language import source_from_json

PRESETS = ("fibonacci", "tribonacci", "thue-morse", "paper-example", "periodic-ab")


def preset_json(name):
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return json.loads(resources.files(__name__).joinpath(f"{name}.json").read_text())


def load_preset(name):
    """Substitution (or periodic word) of a bundled preset."""
    return source_from_json(preset_json(name))
