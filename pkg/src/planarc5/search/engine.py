# src/planarc5/search/engine.py
from __future__ import annotations

import hashlib
import logging
import os
import time
from contextlib import nullcontext
from multiprocessing import Pool
from typing import Iterable, Iterator

from tqdm import tqdm

from planarc5.config import Settings, get_settings
from planarc5.graphs.base import Graph
from planarc5.graphs.graph6 import graph6_encode
from planarc5.search.checkpoint import Checkpoint, checkpoint_resume, checkpoint_save
from planarc5.search.enumerate import SINGLE_VERTEX, check_limit, children, planar_levels
from planarc5.search.records import (
    EVALUATORS,
    Evaluator,
    ExtremalRecord,
    Objective,
    Tally,
    records_to_frame,
)

logger = logging.getLogger(__name__)

__all__ = ["ScanEngine", "extremal_scan", "records_to_frame", "scan"]


def _tally_graphs(
    graphs: Iterable[Graph], objectives: list[Objective], evaluators: dict[Objective, Evaluator]
) -> dict[str, Tally]:
    tallies = {obj.value: Tally() for obj in objectives}
    for g in graphs:
        code: str | None = None

        def encoded() -> str:
            nonlocal code
            if code is None:
                code = graph6_encode(g)
            return code

        for obj in objectives:
            tallies[obj.value].add(evaluators[obj](g), encoded)
    return tallies


def _chunk_graphs(parents: list[Graph]) -> Iterator[Graph]:
    if not parents:
        # n = 1 has no parent level
        yield SINGLE_VERTEX
        return
    for parent in parents:
        yield from children(parent)


def _scan_chunk(payload: tuple[int, list[Graph], list[Objective]]) -> tuple[int, dict[str, Tally]]:
    """Pool worker: every child of one chunk of parents, tallied per objective."""
    index, parents, objectives = payload
    return index, _tally_graphs(_chunk_graphs(parents), objectives, EVALUATORS)


def parents_digest(parents: list[Graph]) -> str:
    h = hashlib.sha256()
    for p in parents:
        h.update(graph6_encode(p).encode())
        h.update(b"\n")
    return h.hexdigest()


class ScanEngine:
    """
    Exhaustive extremal scan over connected planar graphs on n vertices.

    The parents (level n-1, sorted by graph6) are cut into fixed-size chunks.
    Each chunk is one unit of work and one unit of checkpoint progress, so the
    checkpoint does not depend on how many workers ran it.
    """

    def __init__(
        self,
        n: int,
        objectives: Iterable[Objective | str],
        settings: Settings | None = None,
        checkpoint_path: str | None = None,
        evaluators: dict[Objective, Evaluator] | None = None,
    ):
        self.settings = settings or get_settings()
        check_limit(n, self.settings.scan_limit)
        self.n = n
        self.objectives = sorted({Objective(o) for o in objectives}, key=lambda o: o.value)
        if not self.objectives:
            raise ValueError("at least one objective is required")
        self.checkpoint_path = checkpoint_path
        self.evaluators = evaluators
        self.completed = False

    def _pool(self):
        # injected evaluators may not pickle; they run in-process
        if self.settings.workers > 1 and self.evaluators is None:
            return Pool(processes=self.settings.workers)
        return nullcontext(None)

    def _fresh(self, digest: str, total: int) -> Checkpoint:
        return Checkpoint(
            n=self.n,
            objectives=[o.value for o in self.objectives],
            chunk_size=self.settings.chunk_size,
            parents_digest=digest,
            total_chunks=total,
            partial={o.value: Tally() for o in self.objectives},
        )

    def _start(self, digest: str, total: int) -> Checkpoint:
        path = self.checkpoint_path
        if path and os.path.exists(path):
            return checkpoint_resume(
                path,
                n=self.n,
                objectives=[o.value for o in self.objectives],
                chunk_size=self.settings.chunk_size,
                parents_digest=digest,
            )
        return self._fresh(digest, total)

    def run(self, stop_after: int | None = None) -> dict[Objective, ExtremalRecord] | None:
        """
        Scan, merging per-chunk tallies. With `stop_after`, at most that many
        chunks are processed; if work remains the checkpoint is written and
        None is returned.
        """
        if stop_after is not None and stop_after < 0:
            raise ValueError(f"stop_after must be non-negative, got {stop_after}")
        started = time.perf_counter()
        size = self.settings.chunk_size
        with self._pool() as pool:
            parents = planar_levels(self.n - 1, pool) if self.n > 1 else []
            chunks: list[list[Graph]] = [parents[i : i + size] for i in range(0, len(parents), size)]
            if not chunks:
                chunks = [[]]
            ckpt = self._start(parents_digest(parents), len(chunks))
            done = set(ckpt.done_chunks)
            pending = [i for i in range(len(chunks)) if i not in done]
            if stop_after is not None:
                pending = pending[:stop_after]
            logger.info(
                "scan n=%d: %d parents, %d chunks, %d pending", self.n, len(parents), len(chunks), len(pending)
            )

            payloads = [(i, chunks[i], self.objectives) for i in pending]
            if pool is not None:
                results = pool.imap_unordered(_scan_chunk, payloads)
            else:
                evaluators = self.evaluators or EVALUATORS
                results = (
                    (i, _tally_graphs(_chunk_graphs(c), objs, evaluators)) for i, c, objs in payloads
                )

            since_save = 0
            for index, partial in tqdm(
                results,
                total=len(payloads),
                desc=f"scan n={self.n}",
                disable=None if self.settings.progress else True,
            ):
                for key, tally in partial.items():
                    ckpt.partial[key].merge(tally)
                ckpt.done_chunks.append(index)
                since_save += 1
                if self.checkpoint_path and since_save >= self.settings.checkpoint_every:
                    ckpt.elapsed += time.perf_counter() - started
                    started = time.perf_counter()
                    checkpoint_save(self.checkpoint_path, ckpt)
                    since_save = 0

        ckpt.elapsed += time.perf_counter() - started
        if self.checkpoint_path:
            checkpoint_save(self.checkpoint_path, ckpt)
        self.completed = ckpt.complete
        if not self.completed:
            logger.info("scan n=%d stopped at %d/%d chunks", self.n, len(ckpt.done_chunks), ckpt.total_chunks)
            return None
        return {
            o: ExtremalRecord.from_tally(self.n, o, ckpt.partial[o.value], ckpt.elapsed)
            for o in self.objectives
        }


def scan(
    n: int,
    objectives: Iterable[Objective | str],
    settings: Settings | None = None,
    checkpoint_path: str | None = None,
    evaluators: dict[Objective, Evaluator] | None = None,
) -> dict[Objective, ExtremalRecord]:
    """One enumeration pass feeding every requested objective."""
    records = ScanEngine(n, objectives, settings, checkpoint_path, evaluators).run()
    assert records is not None
    return records


def extremal_scan(
    n: int,
    objective: Objective | str,
    settings: Settings | None = None,
    checkpoint_path: str | None = None,
) -> ExtremalRecord:
    objective = Objective(objective)
    return scan(n, [objective], settings, checkpoint_path)[objective]
