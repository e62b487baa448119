import pytest

from friezes import DynkinType, a2_orbit_pattern, e8_example_pattern, emit_frieze


@pytest.fixture(scope="session")
def e8_pattern():
    return e8_example_pattern()


@pytest.fixture(scope="session")
def a2_pattern():
    return a2_orbit_pattern()


@pytest.fixture()
def e8_file(tmp_path, e8_pattern):
    path = tmp_path / "e8.frieze"
    path.write_text(emit_frieze(e8_pattern), encoding="utf-8")
    return str(path)


@pytest.fixture()
def a2_file(tmp_path, a2_pattern):
    path = tmp_path / "a2.frieze"
    path.write_text(emit_frieze(a2_pattern), encoding="utf-8")
    return str(path)


def t(name: str) -> DynkinType:
    return DynkinType.from_name(name)
