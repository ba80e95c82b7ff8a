import pathlib

import pytest

from mvgroups import load_instance

CONFIG_DIR = pathlib.Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture(scope="session")
def config_dir():
    return CONFIG_DIR


@pytest.fixture(scope="session")
def instances():
    """All golden configs, built once."""
    names = [p.stem for p in CONFIG_DIR.glob("*.json")]
    return {name: load_instance(CONFIG_DIR / f"{name}.json") for name in sorted(names)}
