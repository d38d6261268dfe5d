from pathlib import Path

from app.core.schemas import Manifest, StageRecord, StageStatus
from app.repositories.base_repo import BaseRepository, sha256_of

MANIFEST_NAME = "MANIFEST.json"


class ManifestRepository(BaseRepository[Manifest]):
    """
    The MANIFEST.json of a run directory.

    Every stage transition is written through immediately, so the file is
    accurate even when the process dies between stages. Stages run later
    with other settings keep the records of earlier stages; each record
    carries the config hash and seed it ran with.
    """

    def __init__(self):
        super().__init__(Manifest)

    def path(self, run_dir: Path) -> Path:
        return Path(run_dir) / MANIFEST_NAME

    def open(self, run_dir: Path, config_hash: str, seed: int) -> Manifest:
        path = self.path(run_dir)
        if self.exists(path):
            manifest = self.load(path)
            manifest.config_hash, manifest.seed = config_hash, seed
        else:
            manifest = Manifest(config_hash=config_hash, seed=seed)
        return manifest

    def start_stage(self, run_dir: Path, manifest: Manifest, stage: str) -> None:
        manifest.complete = False
        manifest.stages[stage] = StageRecord(
            status=StageStatus.RUNNING, config_hash=manifest.config_hash, seed=manifest.seed
        )
        self.save(self.path(run_dir), manifest)

    def finish_stage(self, run_dir: Path, manifest: Manifest, stage: str, outputs: list[Path]) -> None:
        record = manifest.stages[stage]
        record.status = StageStatus.COMPLETED
        record.outputs = {Path(p).name: sha256_of(Path(p)) for p in outputs}
        manifest.complete = all(r.status == StageStatus.COMPLETED for r in manifest.stages.values())
        self.save(self.path(run_dir), manifest)

    def fail_stage(self, run_dir: Path, manifest: Manifest, stage: str, error: str) -> None:
        record = manifest.stages[stage]
        record.status = StageStatus.FAILED
        record.error = error
        manifest.complete = False
        self.save(self.path(run_dir), manifest)
