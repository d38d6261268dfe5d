from pathlib import Path

from pydantic import TypeAdapter

from app.core.schemas import BaselineExport, EvaluationReport
from app.repositories.base_repo import BaseRepository


class EvaluationRepository(BaseRepository[EvaluationReport]):
    """Scores of a run against planted ground truth, and the greedy baseline's selection."""

    def __init__(self):
        super().__init__(EvaluationReport)
        self._baseline = TypeAdapter(BaselineExport)

    def save_baseline(self, path: Path, export: BaselineExport) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self._baseline.dump_json(export, indent=2))
        return path
