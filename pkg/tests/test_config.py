import pytest

from selfdual.config import SelfDualSettings


def test_defaults_validate():
    cfg = SelfDualSettings()
    assert cfg.validate_all()
    assert cfg.SELFDUAL_ORDER_CAP == 11


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SELFDUAL_ORDER_CAP", "9")
    monkeypatch.setenv("SELFDUAL_ORACLE_WORKERS", "3")
    cfg = SelfDualSettings()
    assert cfg.SELFDUAL_ORDER_CAP == 9
    assert cfg.parallel_oracle


def test_bad_values_are_collected():
    cfg = SelfDualSettings(SELFDUAL_ORDER_CAP=0, SELFDUAL_ORACLE_WORKERS=0)
    with pytest.raises(ValueError, match="SELFDUAL_ORACLE_WORKERS"):
        cfg.validate_oracle_config()
    with pytest.raises(ValueError, match="SELFDUAL_LOG_LEVEL"):
        SelfDualSettings(SELFDUAL_LOG_LEVEL="LOUD").validate_check_config()


def test_linear_time_budget_must_be_positive():
    assert SelfDualSettings().SELFDUAL_LINEAR_TIME_BUDGET > 0
    with pytest.raises(ValueError, match="SELFDUAL_LINEAR_TIME_BUDGET"):
        SelfDualSettings(SELFDUAL_LINEAR_TIME_BUDGET=0).validate_check_config()
