"""
Module defines Settings, the environment-driven configuration of the
toolkit, and the helper that wires up logging for the command line.
"""
# == Standard Library imports ==
import logging
import os
from dataclasses import dataclass
from pathlib import Path

# == Third party imports ==
from dotenv import load_dotenv

# environment variable names
ENV_DATA_DIR = "IBE_TOOLKIT_DATA_DIR"
ENV_LOG_LEVEL = "IBE_TOOLKIT_LOG_LEVEL"
ENV_PIN_PROFILES = "IBE_TOOLKIT_PIN_PROFILES"

TRUE_VALUES = ("1", "true", "yes", "on")

# repository data directory, used when no override is present
DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data"

LOG_FORMAT = "%(name)s [%(levelname)s] %(message)s"


@dataclass(frozen=True)
class Settings:
    """
    Dataclass for resolved runtime settings.
    """
    data_dir: Path
    log_level: str
    # write generated curve profiles into curves_dir
    pin_profiles: bool = False

    @property
    def curves_dir(self) -> Path:
        return self.data_dir / "curves"

    @property
    def tables_dir(self) -> Path:
        return self.data_dir / "tables"


def load_settings(data_dir: str | Path | None = None,
                  log_level: str | None = None,
                  pin_profiles: bool | None = None) -> Settings:
    """
    Function resolves settings: explicit arguments win over the environment
    (including a local .env file), which wins over built-in defaults.
    :param data_dir: Optional data directory override.
    :param log_level: Optional logging level name override.
    :param pin_profiles: Optional override of the profile pinning switch.
    :return: Settings instance.
    """
    load_dotenv()
    resolved_dir = data_dir or os.getenv(ENV_DATA_DIR) or DEFAULT_DATA_DIR
    resolved_level = log_level or os.getenv(ENV_LOG_LEVEL) or "WARNING"
    if pin_profiles is None:
        pin_profiles = os.getenv(ENV_PIN_PROFILES, "").lower() in TRUE_VALUES
    return Settings(data_dir=Path(resolved_dir),
                    log_level=resolved_level.upper(),
                    pin_profiles=pin_profiles)


def configure_logging(settings: Settings) -> None:
    """
    Function configures the root logger once for command line runs.
    :param settings: Resolved settings carrying the level name.
    """
    level = logging.getLevelName(settings.log_level)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)
