# src/planarc5/search/checkpoint.py
from __future__ import annotations

import hashlib
import json
import logging
import os

from pydantic import BaseModel, ValidationError

from planarc5.errors import CheckpointError
from planarc5.search.records import Tally

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


class Checkpoint(BaseModel):
    version: int = CHECKPOINT_VERSION
    n: int
    objectives: list[str]
    chunk_size: int
    parents_digest: str
    total_chunks: int
    done_chunks: list[int] = []
    partial: dict[str, Tally] = {}
    elapsed: float = 0.0
    sha256: str = ""

    @property
    def complete(self) -> bool:
        return len(self.done_chunks) == self.total_chunks

    def content_hash(self) -> str:
        payload = self.model_dump(mode="json", exclude={"sha256"})
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def checkpoint_save(path: str, ckpt: Checkpoint) -> None:
    ckpt.done_chunks = sorted(ckpt.done_chunks)
    ckpt.sha256 = ckpt.content_hash()
    tmp = f"{path}.tmp"
    with open(tmp, "w") as f:
        f.write(ckpt.model_dump_json())
    os.replace(tmp, path)
    logger.info("checkpoint saved: %d/%d chunks -> %s", len(ckpt.done_chunks), ckpt.total_chunks, path)


def checkpoint_load(path: str) -> Checkpoint:
    try:
        with open(path, "r") as f:
            ckpt = Checkpoint.model_validate_json(f.read())
    except (OSError, ValidationError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    if ckpt.version != CHECKPOINT_VERSION:
        raise CheckpointError(f"checkpoint version {ckpt.version}, expected {CHECKPOINT_VERSION}")
    if ckpt.sha256 != ckpt.content_hash():
        raise CheckpointError(f"checkpoint {path} failed its content hash")
    return ckpt


def checkpoint_resume(
    path: str, *, n: int, objectives: list[str], chunk_size: int, parents_digest: str
) -> Checkpoint:
    """Load a checkpoint and make sure it belongs to this exact scan."""
    ckpt = checkpoint_load(path)
    expected = {
        "n": n,
        "objectives": sorted(objectives),
        "chunk_size": chunk_size,
        "parents_digest": parents_digest,
    }
    found = {
        "n": ckpt.n,
        "objectives": sorted(ckpt.objectives),
        "chunk_size": ckpt.chunk_size,
        "parents_digest": ckpt.parents_digest,
    }
    for key, value in expected.items():
        if found[key] != value:
            raise CheckpointError(f"checkpoint {key} is {found[key]!r}, this scan has {value!r}")
    logger.info("resuming from %s: %d/%d chunks done", path, len(ckpt.done_chunks), ckpt.total_chunks)
    return ckpt
