import pytest

from ffperm import config
from ffperm.ffield import FieldError, field_create


def test_default_bound(monkeypatch):
    monkeypatch.delenv(config.MAX_FIELD_SIZE_ENV_VAR, raising=False)
    assert config.max_field_size() == config.DEFAULT_MAX_FIELD_SIZE == 2 ** 20


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv(config.MAX_FIELD_SIZE_ENV_VAR, '100')
    assert config.max_field_size() == 100


@pytest.mark.parametrize('raw', ['abc', '1', '-5', '2.5'])
def test_bad_bound(monkeypatch, raw):
    monkeypatch.setenv(config.MAX_FIELD_SIZE_ENV_VAR, raw)

    with pytest.raises(config.ConfigError):
        config.max_field_size()


def test_bound_limits_fields(monkeypatch):
    monkeypatch.setenv(config.MAX_FIELD_SIZE_ENV_VAR, '100')

    assert field_create(3, 4).q == 81

    with pytest.raises(FieldError):
        field_create(7, 3)


def test_log_path_under_state_home():
    assert config.LOG_PATH.startswith(config.XDG_STATE_HOME)
    assert config.LOG_PATH.endswith('ffperm.log')
