import os
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict

from dotenv import load_dotenv

from src.errors import ConfigError

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class EngineConfig:
    """
    Configuration for the invariant engine
    """

    enumeration_cap: int = 6
    max_crossings: int = 24  # Kauffman state-sum cap
    corpus_path: str = "data/corpus.jsonl"
    default_seed: int = 0
    random_words: int = 50  # words per randomized property check
    max_word_length: int = 6
    max_strands: int = 4
    log_level: str = "INFO"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got '{raw}'")


def load_config() -> EngineConfig:
    """
    Load configuration from environment variables
    """
    load_dotenv()

    config = EngineConfig(
        enumeration_cap=_int_env("ENUMERATION_CAP", 6),
        max_crossings=_int_env("KAUFFMAN_MAX_CROSSINGS", 24),
        corpus_path=os.getenv("CORPUS_PATH", "data/corpus.jsonl"),
        default_seed=_int_env("DEFAULT_SEED", 0),
        random_words=_int_env("RANDOM_WORDS", 50),
        max_word_length=_int_env("MAX_WORD_LENGTH", 6),
        max_strands=_int_env("MAX_STRANDS", 4),
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
    )
    if config.log_level not in LOG_LEVELS:
        raise ConfigError(f"LOG_LEVEL is not a logging level: {config.log_level}")
    logger.debug(f"Loaded configuration: {config}")
    return config
