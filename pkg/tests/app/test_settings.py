import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from src.app.core.errors import ConfigurationError
from src.app.settings import AppSettings, load_app_settings


class TestLoadAppSettings(unittest.TestCase):
    """YAML defaults merged with environment overrides."""

    def setUp(self) -> None:
        load_app_settings.cache_clear()
        self.addCleanup(load_app_settings.cache_clear)

    def test_shipped_defaults(self) -> None:
        """
        默认配置文件中的取值。
        """
        settings = load_app_settings()
        self.assertEqual(16, settings.oracle.vertex_cap)
        self.assertEqual(0.5, settings.random.density)

    def test_environment_overrides(self) -> None:
        """
        环境变量覆盖配置文件。
        """
        with patch.dict(os.environ, {"VITAL_LINKAGE_ORACLE_CAP": "9", "VITAL_LINKAGE_LOG_LEVEL": "DEBUG"}):
            settings = load_app_settings()
        self.assertEqual(9, settings.oracle.vertex_cap)
        self.assertEqual("DEBUG", settings.logging.level)

    def test_custom_file(self) -> None:
        """
        VITAL_LINKAGE_CONFIG 指定其他配置文件，未给出的部分取默认值。
        """
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "app.yaml"
            path.write_text("pathwidth:\n  vertex_cap: 10\n", encoding="utf-8")
            with patch.dict(os.environ, {"VITAL_LINKAGE_CONFIG": str(path)}):
                settings = load_app_settings()
        self.assertEqual(10, settings.pathwidth.vertex_cap)
        self.assertEqual(AppSettings().xx, settings.xx)

    def test_missing_file_falls_back(self) -> None:
        """
        配置文件不存在时使用内置默认值。
        """
        with patch.dict(os.environ, {"VITAL_LINKAGE_CONFIG": "/nonexistent/app.yaml"}):
            self.assertEqual(AppSettings().oracle, load_app_settings().oracle)

    def test_invalid_values(self) -> None:
        """
        非整数的上限或超出范围的概率都会被包装成 ConfigurationError。
        """
        with patch.dict(os.environ, {"VITAL_LINKAGE_ORACLE_CAP": "many"}):
            with self.assertRaises(ConfigurationError):
                load_app_settings()
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "app.yaml"
            path.write_text("random:\n  density: 1.5\n", encoding="utf-8")
            with patch.dict(os.environ, {"VITAL_LINKAGE_CONFIG": str(path)}):
                with self.assertRaises(ConfigurationError):
                    load_app_settings()


if __name__ == "__main__":
    unittest.main()
