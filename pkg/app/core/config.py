import hashlib
import json
from pathlib import Path
from typing import Any

from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.core.exceptions import ConfigurationError, DataError
from app.core.schemas.cluster import ClusterConfig
from app.core.schemas.injection import BackgroundSpec, InjectionSpec
from app.core.schemas.model import LossWeights, TrainConfig
from app.core.schemas.report import FingerprintConfig
from app.core.schemas.search import SearchSpace, SweepConfig


class PathsConfig(BaseModel):
    edge_file: Path | None = None
    attribute_file: Path | None = None
    graph_file: Path | None = None
    checkpoint_file: Path | None = None
    ground_truth_file: Path | None = None
    best_config_file: Path | None = None
    run_dir: Path | None = None
    output_root: Path = Path("runs")
    output_dir: Path | None = None

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def default_output_dir(self) -> Self:
        if self.output_dir is None:
            self.output_dir = self.output_root / "latest"
        return self


class LoggingConfig(BaseModel):
    level: str = "INFO"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    model_config = ConfigDict(extra="forbid")


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        case_sensitive=False,
        env_nested_delimiter="__",
        env_prefix='APP_CONFIG__',
        env_file=('.env.template', '.env'),
        extra='forbid',
    )
    paths: PathsConfig = PathsConfig()
    logging: LoggingConfig = LoggingConfig()
    loss: LossWeights = LossWeights()
    train: TrainConfig = TrainConfig()
    cluster: ClusterConfig = ClusterConfig()
    fingerprint: FingerprintConfig = FingerprintConfig()
    background: BackgroundSpec | None = None
    injection: InjectionSpec | None = None
    search: SearchSpace | None = None
    sweep: SweepConfig | None = None

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON form of the resolved settings, file locations and logging excluded."""
        values = self.model_dump(mode="json", exclude={"paths", "logging"})
        canonical = json.dumps(values, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _deep_merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_settings(config_file: Path | None = None, overrides: dict[str, Any] | None = None) -> Settings:
    """
    Resolve the run settings.

    Precedence, highest first: `overrides` (CLI flags, as a nested dict),
    the JSON `config_file`, APP_CONFIG__* environment variables, defaults.
    Args:
        config_file (Path | None): Optional JSON config document.
        overrides (dict | None): Nested values that win over the file.
    Returns:
        Settings: Validated settings.
    Raises:
        DataError: If the config file cannot be read.
        ConfigurationError: If the merged values fail validation.
    """
    data: dict[str, Any] = {}
    if config_file is not None:
        try:
            data = json.loads(Path(config_file).read_text(encoding="utf-8"))
        except OSError as exc:
            raise DataError(f"Cannot read config file {config_file}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{config_file}:{exc.lineno}: invalid JSON ({exc.msg})") from exc
        if not isinstance(data, dict):
            raise ConfigurationError(f"{config_file}: top-level JSON value must be an object")
    if overrides:
        data = _deep_merge(data, overrides)
    try:
        return Settings(**data)
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid configuration: {exc}") from exc


settings = Settings()
