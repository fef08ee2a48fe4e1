"""HTTP API: upload a CSV, pick columns, train, and read results or plots.

State lives in an in-memory session store keyed by unguessable dataset ids;
entries idle longer than the TTL are evicted lazily.  Training is synchronous
(six normal-equation fits on desk-scale data finish in well under a second)
and serializes per dataset, so concurrent retrains of the same dataset each
produce an internally consistent stored document.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .dataset import Dataset, SplitView, parse_csv, select_columns, split_dataset
from .errors import (
    AllFamiliesFailedError,
    CsvError,
    DuplicateFeatureError,
    DuplicateHeaderError,
    EmptyInputError,
    EmptyTrainError,
    LabelInFeaturesError,
    RaggedRowError,
    SelectionError,
    UnknownColumnError,
)
from .fitting import RankedModels, auto_train
from .models import MAX_POLY_ORDER, ModelFamily
from .report import ResultDocument, build_result_document, plot_series

DEFAULT_MAX_UPLOAD = 32 * 1024 * 1024
DEFAULT_TTL_SECONDS = 3600.0


@dataclass
class StoredDataset:
    dataset: Dataset
    name: str
    created: float
    touched: float
    lock: threading.Lock = field(default_factory=threading.Lock)
    document: ResultDocument | None = None
    ranked: RankedModels | None = None
    train_view: SplitView | None = None


class SessionStore:
    """Thread-safe dataset-id → stored state map with idle-TTL eviction."""

    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS, clock=time.monotonic):
        self._ttl = ttl_seconds
        self._clock = clock
        self._entries: dict[str, StoredDataset] = {}
        self._lock = threading.Lock()

    def _evict_expired(self) -> None:
        now = self._clock()
        expired = [
            key
            for key, entry in self._entries.items()
            if now - entry.touched > self._ttl
        ]
        for key in expired:
            del self._entries[key]

    def put(self, dataset: Dataset, name: str) -> str:
        with self._lock:
            self._evict_expired()
            dataset_id = secrets.token_hex(16)
            now = self._clock()
            self._entries[dataset_id] = StoredDataset(dataset, name, now, now)
            return dataset_id

    def get(self, dataset_id: str) -> StoredDataset | None:
        with self._lock:
            self._evict_expired()
            entry = self._entries.get(dataset_id)
            if entry is not None:
                entry.touched = self._clock()
            return entry


class TrainRequest(BaseModel):
    dataset_id: str
    features: list[str]
    label: str
    test_percent: float = 10.0
    seed: int = 42
    order: int = 2


def _error(status: int, code: str, detail: str, **extra) -> JSONResponse:
    return JSONResponse({"error": code, "detail": detail, **extra}, status_code=status)


_CSV_ERROR_CODES = {
    EmptyInputError: "empty_input",
    DuplicateHeaderError: "duplicate_header",
    RaggedRowError: "ragged_row",
}

_SELECTION_ERROR_CODES = {
    UnknownColumnError: "unknown_column",
    LabelInFeaturesError: "label_in_features",
    DuplicateFeatureError: "duplicate_feature",
}


def create_app(
    store: SessionStore | None = None,
    static_dir: str | None = None,
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD,
) -> FastAPI:
    app = FastAPI(title="curfit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store if store is not None else SessionStore()

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/datasets")
    async def upload_dataset(request: Request):
        declared = request.headers.get("content-length")
        if declared is not None and declared.isdigit() and int(declared) > max_upload_bytes:
            return _error(413, "too_large", f"upload exceeds {max_upload_bytes} bytes")

        name = "upload"
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("multipart/form-data"):
            form = await request.form()
            part = form.get("file")
            if part is None or isinstance(part, str):
                return _error(400, "missing_file", "multipart part 'file' is required")
            body = await part.read()
            if part.filename:
                name = part.filename
        else:
            body = await request.body()
        if len(body) > max_upload_bytes:
            return _error(413, "too_large", f"upload exceeds {max_upload_bytes} bytes")

        try:
            dataset = parse_csv(body)
        except CsvError as exc:
            code = _CSV_ERROR_CODES.get(type(exc), "invalid_csv")
            return _error(400, code, str(exc))

        dataset_id = app.state.store.put(dataset, name)
        return {
            "dataset_id": dataset_id,
            "columns": list(dataset.column_names),
            "rows": dataset.n,
            "dropped_rows": dataset.dropped_row_count,
        }

    @app.post("/api/train")
    def train(req: TrainRequest):
        entry = app.state.store.get(req.dataset_id)
        if entry is None:
            return _error(404, "unknown_dataset", f"no dataset {req.dataset_id!r}")
        if not 0.0 <= req.test_percent < 100.0:
            return _error(422, "invalid_parameter", "test_percent must be in [0, 100)")
        if not 1 <= req.order <= MAX_POLY_ORDER:
            return _error(422, "invalid_parameter", f"order must be in 1..{MAX_POLY_ORDER}")

        with entry.lock:
            try:
                sel = select_columns(entry.dataset, req.features, req.label)
                split = split_dataset(entry.dataset, sel, req.test_percent, req.seed)
                ranked = auto_train(split, order=req.order)
            except SelectionError as exc:
                code = _SELECTION_ERROR_CODES.get(type(exc), "invalid_selection")
                return _error(422, code, str(exc))
            except EmptyTrainError as exc:
                return _error(422, "empty_train", str(exc))
            except AllFamiliesFailedError as exc:
                return _error(
                    422, "all_families_failed", str(exc), families=exc.notes
                )
            document = build_result_document(
                ranked,
                dataset_name=entry.name,
                rows=entry.dataset.n,
                dropped_rows=entry.dataset.dropped_row_count,
                feature_names=tuple(req.features),
                label_name=req.label,
                test_percent=req.test_percent,
                seed=req.seed,
            )
            entry.document = document
            entry.ranked = ranked
            entry.train_view = split.train
        return JSONResponse(document.to_dict())

    @app.get("/api/results/{dataset_id}")
    def results(dataset_id: str):
        entry = app.state.store.get(dataset_id)
        if entry is None or entry.document is None:
            return _error(404, "no_results", "train this dataset first")
        return JSONResponse(entry.document.to_dict())

    @app.get("/api/plot/{dataset_id}/{family}")
    def plot(dataset_id: str, family: str):
        entry = app.state.store.get(dataset_id)
        if entry is None or entry.ranked is None or entry.train_view is None:
            return _error(404, "no_results", "train this dataset first")
        try:
            wanted = ModelFamily(family)
        except ValueError:
            return _error(404, "unknown_family", f"no family token {family!r}")
        for ranked_entry in entry.ranked.entries:
            if ranked_entry.family is wanted and ranked_entry.succeeded:
                payload = plot_series(ranked_entry.model, entry.train_view).payload()
                return {
                    "scatter": [list(p) for p in payload.scatter],
                    "curve": [list(p) for p in payload.curve],
                    "feature": payload.feature_name,
                    "label": payload.label_name,
                    "degenerate": payload.degenerate,
                }
        return _error(404, "family_not_fitted", f"{family} did not produce a model")

    if static_dir is not None:
        import os

        from fastapi.staticfiles import StaticFiles

        if os.path.isdir(static_dir):
            app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
