import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from supercoh import catalog
from supercoh.algfile import parse_algebra_dict


@pytest.fixture(scope="session")
def loaded_catalog():
    """entry_id -> (entry, algebra, {module name: Representation})."""
    out = {}
    for e in catalog.ENTRIES:
        g, modules, warnings = parse_algebra_dict(e.data)
        assert not warnings
        out[e.entry_id] = (e, g, modules)
    return out


@pytest.fixture(scope="session")
def small_catalog(loaded_catalog):
    """The p=3 entries with at most 2-dimensional algebras, for heavy fuzz."""
    keep = ("a1-null", "a2-torus", "a3-heisenberg", "a4-borel",
            "a5-odd-line", "a7-mixed-line")
    return {k: loaded_catalog[k] for k in keep}


def fixture_algebra(loaded_catalog, entry_id, module="k"):
    e, g, modules = loaded_catalog[entry_id]
    return g, modules[module]
