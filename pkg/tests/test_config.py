import os
from unittest.mock import patch

import pytest

from src.config import EngineConfig, load_config
from src.errors import ConfigError


class TestConfiguration:
    """Environment-driven engine configuration"""

    def test_defaults(self):
        config = EngineConfig()
        assert config.enumeration_cap == 6
        assert config.max_crossings == 24
        assert config.corpus_path == "data/corpus.jsonl"
        assert config.to_dict()["log_level"] == "INFO"

    @patch("src.config.load_dotenv")
    def test_environment_overrides(self, _load_dotenv):
        env = {
            "ENUMERATION_CAP": "5",
            "KAUFFMAN_MAX_CROSSINGS": "12",
            "CORPUS_PATH": "/tmp/corpus.jsonl",
            "DEFAULT_SEED": "42",
            "RANDOM_WORDS": "7",
            "MAX_WORD_LENGTH": "3",
            "MAX_STRANDS": "3",
            "LOG_LEVEL": "debug",
        }
        with patch.dict(os.environ, env):
            config = load_config()
        assert config.enumeration_cap == 5
        assert config.max_crossings == 12
        assert config.corpus_path == "/tmp/corpus.jsonl"
        assert config.default_seed == 42
        assert config.random_words == 7
        assert config.max_word_length == 3
        assert config.max_strands == 3
        assert config.log_level == "DEBUG"

    @patch("src.config.load_dotenv")
    def test_blank_values_use_defaults(self, _load_dotenv):
        with patch.dict(os.environ, {"ENUMERATION_CAP": "  ", "DEFAULT_SEED": ""}):
            config = load_config()
        assert config.enumeration_cap == 6
        assert config.default_seed == 0

    @pytest.mark.parametrize(
        "name,value",
        [("ENUMERATION_CAP", "six"), ("DEFAULT_SEED", "1.5"), ("LOG_LEVEL", "LOUD")],
    )
    @patch("src.config.load_dotenv")
    def test_invalid_values(self, _load_dotenv, name, value):
        with patch.dict(os.environ, {name: value}):
            with pytest.raises(ConfigError) as excinfo:
                load_config()
        assert name in str(excinfo.value)
