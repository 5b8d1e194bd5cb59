"""
Runtime settings, read from the environment (and a .env file when present)
"""
import os
from dataclasses import dataclass
from functools import lru_cache

# Load environment variables from .env file
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # dotenv not installed, will use system environment variables


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class Settings:
    """Environment-driven settings"""
    threads: int = 1
    log_level: str = "INFO"
    log_format: str = "text"  # text, json
    float_eps: float = 1e-9  # zero threshold per unit of sequence length
    show_progress: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        try:
            threads = int(os.getenv("GZCZ_THREADS", "1"))
        except ValueError:
            threads = 1
        try:
            float_eps = float(os.getenv("GZCZ_FLOAT_EPS", "1e-9"))
        except ValueError:
            float_eps = 1e-9

        log_format = os.getenv("GZCZ_LOG_FORMAT", "text").strip().lower()
        if log_format not in ("text", "json"):
            log_format = "text"

        return cls(
            threads=max(1, threads),
            log_level=os.getenv("GZCZ_LOG_LEVEL", "INFO").strip().upper(),
            log_format=log_format,
            float_eps=float_eps,
            show_progress=_env_bool("GZCZ_SHOW_PROGRESS", False),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
