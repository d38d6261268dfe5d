import hashlib
from pathlib import Path
from typing import Any, Generic, TypeVar

import pandas as pd
from pydantic import TypeAdapter, ValidationError

from app.core.exceptions import DataError, GraphFormatError

SchemaType = TypeVar("SchemaType")


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


class BaseRepository(Generic[SchemaType]):
    """
    Generic base repository that persists one pydantic document type as JSON.
    Can be extended for any schema (or list of schemas); artifact-specific
    repositories add their CSV/TSV formats on top.
    """

    schema: Any

    def __init__(self, schema: Any):
        self.schema = schema
        self.adapter: TypeAdapter[SchemaType] = TypeAdapter(schema)

    def save(self, path: Path, obj: SchemaType) -> Path:
        """Write the document as indented JSON, creating parent directories."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.adapter.dump_json(obj, indent=2))
        return path

    def load(self, path: Path) -> SchemaType:
        """Read and validate a document."""
        path = Path(path)
        raw = self.read_text(path)
        try:
            return self.adapter.validate_json(raw)
        except ValidationError as exc:
            raise GraphFormatError(str(path), None, f"invalid document ({exc.error_count()} errors): {exc}") from exc

    def exists(self, path: Path) -> bool:
        return Path(path).is_file()

    @staticmethod
    def read_text(path: Path) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise DataError(f"Cannot read {path}: {exc.strerror or exc}") from exc

    @staticmethod
    def write_frame(path: Path, frame: pd.DataFrame) -> Path:
        """CSV with full float precision, so reruns are byte-comparable."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
        return path

    @staticmethod
    def read_frame(path: Path, columns: list[str], dtype: dict[str, Any] | None = None) -> pd.DataFrame:
        """Read a CSV artifact and check its header starts with `columns`."""
        path = Path(path)
        if not path.is_file():
            raise DataError(f"Cannot read {path}: file not found")
        try:
            frame = pd.read_csv(path, dtype=dtype, keep_default_na=False)
        except (pd.errors.ParserError, pd.errors.EmptyDataError, ValueError) as exc:
            raise GraphFormatError(str(path), None, f"malformed CSV ({exc})") from exc
        if list(frame.columns[: len(columns)]) != columns:
            raise GraphFormatError(str(path), 1, f"expected columns {columns}, got {list(frame.columns)}")
        return frame
