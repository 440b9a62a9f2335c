import logging

import pytest

from ornalat.utils.config import DEFAULT_CAP, DEFAULT_THREADS, Settings, default_cap, default_threads
from ornalat.utils.logging_config import get_logger, set_level, summarize_for_logging


class TestSettings:
    def test_defaults(self):
        settings = Settings.from_env()
        assert settings.cap == DEFAULT_CAP == 100_000
        assert settings.threads == DEFAULT_THREADS == 1
        assert settings.debug_mode is False

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("ORNALAT_CAP", "250")
        monkeypatch.setenv("ORNALAT_THREADS", "4")
        monkeypatch.setenv("DEBUG_MODE", "TRUE")
        assert Settings.from_env() == Settings(cap=250, threads=4, debug_mode=True)
        assert default_cap() == 250
        assert default_threads() == 4

    @pytest.mark.parametrize("raw", ["", "abc", "0", "-5"])
    def test_bad_values_fall_back(self, monkeypatch, raw):
        monkeypatch.setenv("ORNALAT_CAP", raw)
        assert default_cap() == DEFAULT_CAP


class TestLogging:
    def test_level_follows_debug_mode(self, monkeypatch):
        monkeypatch.setenv("DEBUG_MODE", "true")
        assert get_logger("ornalat.test.debug").level == logging.DEBUG
        monkeypatch.setenv("DEBUG_MODE", "false")
        assert get_logger("ornalat.test.quiet").level == logging.WARNING

    def test_reconfiguring_keeps_one_handler(self):
        get_logger("ornalat.test.handlers")
        logger = get_logger("ornalat.test.handlers", "info")
        assert len(logger.handlers) == 1
        assert logger.level == logging.INFO

    def test_file_handler(self, tmp_path):
        logger = get_logger("ornalat.test.file", "INFO", log_to_file=True, log_directory=str(tmp_path))
        logger.info("hello")
        for handler in logger.handlers:
            handler.flush()
        assert "hello" in (tmp_path / "ornalat_test_file.log").read_text()
        for handler in logger.handlers:
            handler.close()

    def test_set_level(self):
        logger = get_logger("ornalat.test.level", "WARNING")
        set_level(logger, "debug")
        assert logger.level == logging.DEBUG

    def test_summarize(self):
        assert summarize_for_logging([1, 2]) == "[1, 2]"
        summary = summarize_for_logging("x" * 200, limit=10)
        assert summary == "xxxxxxxxxx... (+190 chars)"

    def test_shared_loggers(self):
        from ornalat.building import constructors
        from ornalat.lattice import enumeration
        from ornalat.utils.debug import debug, debug_cli

        assert debug.name == "ornalat"
        assert debug_cli.name == "ornalat.cli"
        assert constructors.logger is debug
        assert enumeration.logger is debug
