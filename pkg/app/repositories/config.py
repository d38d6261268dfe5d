from pathlib import Path

from app.core.config import Settings, load_settings
from app.repositories.base_repo import BaseRepository

CONFIG_NAME = "config.json"


class SettingsRepository(BaseRepository[Settings]):
    """
    The resolved settings a run directory was produced with.
    The file is a regular JSON config document, so `--config <run>/config.json`
    replays the run.
    """

    def __init__(self):
        super().__init__(Settings)

    def path(self, run_dir: Path) -> Path:
        return Path(run_dir) / CONFIG_NAME

    def load(self, path: Path) -> Settings:
        return load_settings(Path(path))
