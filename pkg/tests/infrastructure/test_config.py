import json

import pytest

from triglide.domain.errors import InputValidationError
from triglide.domain.models import GeometryConfig
from triglide.infrastructure.config.config import Settings, get_settings
from triglide.infrastructure.config.geometry_loader import load_geometry


class TestSettings:
    def test_defaults(self, settings):
        assert settings.singular_band == 1e-10
        assert settings.boundary_band == 1e-10
        assert settings.near_singular_band == 1e-3
        assert settings.dedup_tol == 1e-6
        assert settings.oracle_starts == 2000
        assert settings.geometry_file is None

    def test_tol_overrides_both_bands(self, monkeypatch):
        monkeypatch.setenv("TRIGLIDE_TOL", "1e-6")
        settings = Settings()
        assert settings.singular_band == 1e-6
        assert settings.boundary_band == 1e-6
        assert settings.near_singular_band == 1e-3

    def test_empty_values_are_unset(self, monkeypatch):
        monkeypatch.setenv("TRIGLIDE_TOL", "")
        monkeypatch.setenv("TRIGLIDE_GEOMETRY_FILE", "")
        settings = Settings()
        assert settings.tol is None
        assert settings.geometry_file is None

    def test_negative_band_rejected(self, monkeypatch):
        monkeypatch.setenv("TRIGLIDE_TOL", "-1")
        with pytest.raises(ValueError):
            Settings()

    def test_every_field_is_a_known_setting(self):
        assert "env" not in Settings.model_fields
        assert {"unit_norm_tol", "root_merge_tol", "root_refine_tol"} <= set(Settings.model_fields)

    def test_cached(self):
        assert get_settings() is get_settings()


class TestGeometryLoader:
    def test_defaults_without_path(self):
        assert load_geometry() == GeometryConfig(base_offset=2.0, platform_edge=1.0)

    def test_json(self, tmp_path):
        path = tmp_path / "geometry.json"
        path.write_text(json.dumps({"base_offset": 3.5, "platform_edge": 0.2}))
        geometry = load_geometry(path)
        assert geometry.base_offset == 3.5
        assert geometry.platform_edge == 0.2

    def test_toml_section(self, tmp_path):
        path = tmp_path / "robot.toml"
        path.write_text("[geometry]\nplatform_edge = 0.5\n")
        geometry = load_geometry(str(path))
        assert geometry.platform_edge == 0.5
        assert geometry.base_offset == 2.0

    def test_toml_top_level(self, tmp_path):
        path = tmp_path / "robot.toml"
        path.write_text("base_offset = 1.25\n")
        assert load_geometry(path).base_offset == 1.25

    @pytest.mark.parametrize(
        "name, text",
        [
            ("bad.json", "{not json"),
            ("bad.toml", "platform_edge = = 1"),
            ("negative.json", '{"platform_edge": -1.0}'),
            ("unknown.json", '{"edge": 1.0}'),
        ],
    )
    def test_invalid_files(self, tmp_path, name, text):
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(InputValidationError):
            load_geometry(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputValidationError):
            load_geometry(tmp_path / "absent.json")
