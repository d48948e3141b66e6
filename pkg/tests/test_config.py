import pytest

from sympow.config import SympowConfig, load_config
from sympow.utils.guards import Guards, current_guards, guarded


def test_defaults():
    config = SympowConfig()
    assert config.guards == Guards()
    assert config.default_strategy == "auto"


def test_from_yaml(tmp_path, monkeypatch):
    monkeypatch.setenv("SYMPOW_TEST_LEVEL", "DEBUG")
    path = tmp_path / "config.yaml"
    path.write_text(
        "guards:\n  degree: 12\n  seconds: 5\nlog_level: ${SYMPOW_TEST_LEVEL}\ndefault_strategy: minimal-prime-intersection\n",
        encoding="utf-8",
    )
    config = SympowConfig.from_yaml(str(path))
    assert config.guards.degree == 12
    assert config.guards.seconds == 5.0
    assert config.log_level == "DEBUG"
    assert config.default_strategy == "minimal-prime-intersection"


def test_empty_yaml(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert SympowConfig.from_yaml(str(path)) == SympowConfig()


def test_bad_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("plugins: []\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Unknown configuration sections"):
        SympowConfig.from_yaml(str(path))
    with pytest.raises(FileNotFoundError):
        SympowConfig.from_yaml(str(tmp_path / "missing.yaml"))


def test_load_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "env.yaml"
    path.write_text("guards:\n  degree: 7\n", encoding="utf-8")
    monkeypatch.setenv("SYMPOW_CONFIG", str(path))
    assert load_config().guards.degree == 7
    monkeypatch.delenv("SYMPOW_CONFIG")
    assert load_config().guards.degree == Guards().degree


def test_overrides():
    config = SympowConfig().with_overrides(degree=9, seconds=None)
    assert config.guards.degree == 9
    assert config.guards.seconds == Guards().seconds
    with pytest.raises(ValueError):
        Guards(degree=0)


def test_guarded_restores_previous_limits():
    before = current_guards()
    with guarded(degree=5) as inner:
        assert current_guards().degree == 5
        with guarded(Guards(degree=6)):
            assert current_guards().degree == 6
        assert current_guards() is inner
    assert current_guards() == before
