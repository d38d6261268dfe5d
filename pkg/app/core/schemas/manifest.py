from app._compat import StrEnum

from pydantic import BaseModel, Field


class StageStatus(StrEnum):
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class StageRecord(BaseModel):
    status: StageStatus = StageStatus.RUNNING
    config_hash: str | None = Field(None, description="Hash of the settings the stage ran with.")
    seed: int | None = None
    outputs: dict[str, str] = Field(default_factory=dict, description="Output file name -> SHA-256 checksum.")
    error: str | None = None


class Manifest(BaseModel):
    """
    Completeness and reproducibility record of a run directory.

    Written after every stage, so a directory left behind by a failed run
    still states which stages finished and which one failed.
    """
    config_hash: str
    seed: int
    complete: bool = False
    stages: dict[str, StageRecord] = Field(default_factory=dict)
