import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

# pylint: disable=wrong-import-position
from unchained.FinSet_category import FinSet
from unchained.Signature_functor import PolyElem, Signature
from unchained.Coalgebra_recursion import Coalgebra

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return str(FIXTURES / name)

    return _path


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def loop():
    """x ↦ node(x, x), the smallest non-recursive cherry coalgebra."""
    return Coalgebra(
        Signature.cherry(), FinSet(("x",)), {"x": PolyElem("node", ("x", "x"))}
    )


@pytest.fixture
def counter():
    """a ↦ z, b ↦ s(a), c ↦ s(b)."""
    return Coalgebra(
        Signature.successor(),
        FinSet(("a", "b", "c")),
        {
            "a": PolyElem("z"),
            "b": PolyElem("s", ("a",)),
            "c": PolyElem("s", ("b",)),
        },
    )
