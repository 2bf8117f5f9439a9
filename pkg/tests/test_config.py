from __future__ import annotations

import pytest

from g2zeta.config import Config, get_config, load_config, using


def test_defaults():
    cfg = Config()
    assert cfg.seed == 7 and cfg.default_T == 60.0 and cfg.scan_step == 0.01


def test_file_and_environment(tmp_path):
    path = tmp_path / "g2.ini"
    path.write_text("seed = 11\nscan_step = 0.02\n")
    cfg = load_config(path, environ={"G2ZETA_SEED": "13"})
    assert cfg.scan_step == 0.02
    assert cfg.seed == 13


def test_sectioned_file(tmp_path):
    path = tmp_path / "g2.ini"
    path.write_text("[zeros]\ncontour_points = 500\n")
    assert load_config(path, environ={}).contour_points == 500


@pytest.mark.parametrize("text", ["bogus = 1\n", "scan_step = -1\n", "seed = x\n"])
def test_bad_values_are_rejected(tmp_path, text):
    path = tmp_path / "g2.ini"
    path.write_text(text)
    with pytest.raises(ValueError):
        load_config(path, environ={})


def test_using_restores_previous():
    before = get_config()
    with using(before.replace(seed=99)):
        assert get_config().seed == 99
    assert get_config() is before
