import pytest

from monocurve.scalars import RATIONALS, set_active_field


@pytest.fixture(autouse=True)
def _rational_field_by_default():
    """The coefficient field is run-level state; isolate it per test."""
    set_active_field(RATIONALS)
    yield
    set_active_field(RATIONALS)
