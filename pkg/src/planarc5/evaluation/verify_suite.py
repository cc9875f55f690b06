# src/planarc5/evaluation/verify_suite.py
from __future__ import annotations

import logging
import os
import tempfile
from typing import Callable

import numpy as np
import pandas as pd
from pydantic import BaseModel

from planarc5.config import Settings, get_settings
from planarc5.constructions.families import Family, apex_tripartite, build, k2_book
from planarc5.counting.cycles import vertex_c5_loads
from planarc5.counting.oracle import count_induced_pattern_oracle, count_pattern_oracle
from planarc5.graphs.base import Graph, from_edges, random_graph
from planarc5.graphs.graph6 import graph6_decode
from planarc5.lemmas.basic_bound import lemma_one_sweep
from planarc5.lemmas.regions import find_empty_k2k
from planarc5.planarity.embedding import embed
from planarc5.search.engine import ScanEngine, scan
from planarc5.search.enumerate import SINGLE_VERTEX, next_level
from planarc5.search.records import EVALUATORS, Evaluator, Objective

logger = logging.getLogger(__name__)

C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

APEX_SIZES = (7, 10, 13, 16, 19, 31, 301)
BOOK_SIZES = (4, 6, 10, 100)

# exhaustive-scan maxima of the induced 5-cycle count; no closed form is known
INDUCED_C5_MAXIMA = {5: 1, 6: 2, 7: 4, 8: 8}

RESUME_N = 7
RESUME_CHUNK_SIZE = 8
RESUME_STOP_AFTER = 6


def c5_maximum(n: int) -> int:
    return 2 * n * n - 10 * n + 12


def c4_maximum(n: int) -> int:
    return (n * n + 3 * n - 22) // 2


class ClaimRow(BaseModel):
    claim: str
    expected: str
    actual: str
    passed: bool


class VerifySuiteResult(BaseModel):
    rows: list[ClaimRow] = []

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [r.model_dump() for r in self.rows], columns=["claim", "expected", "actual", "passed"]
        )


class _Suite:
    def __init__(
        self, fast: bool, counters: dict[Objective, Evaluator], settings: Settings, injected: bool
    ):
        self.fast = fast
        self.counters = counters
        self.injected = injected
        self.settings = settings
        self.result = VerifySuiteResult()

    def record(self, claim: str, expected, actual, passed: bool | None = None) -> None:
        ok = expected == actual if passed is None else passed
        self.result.rows.append(ClaimRow(claim=claim, expected=str(expected), actual=str(actual), passed=ok))
        logger.info("%-32s expected=%s actual=%s %s", claim, expected, actual, "ok" if ok else "FAIL")

    def count(self, objective: Objective, g: Graph) -> int:
        return self.counters[objective](g)

    def scans(self) -> None:
        top = 7 if self.fast else 8
        for n in range(4, top + 1):
            objectives = [Objective.C4]
            if n >= 5:
                objectives += [Objective.C5, Objective.INDUCED_C5]
            evaluators = self.counters if self.injected else None
            records = scan(n, objectives, self.settings, evaluators=evaluators)
            self.record(f"c4_maximum.n={n}", c4_maximum(n), records[Objective.C4].maximum)
            if n < 5:
                continue
            self.record(f"c5_maximum.n={n}", c5_maximum(n), records[Objective.C5].maximum)
            induced = records[Objective.INDUCED_C5]
            self.record(f"induced_c5_maximum.n={n}", INDUCED_C5_MAXIMA[n], induced.maximum)
            oracle = {count_induced_pattern_oracle(graph6_decode(w), C5) for w in induced.witnesses}
            self.record(f"induced_c5_witnesses.n={n}", {induced.maximum}, oracle)
            if n == 7:
                apex = self.count(Objective.INDUCED_C5, apex_tripartite(7))
                self.record(
                    "apex_tripartite.n=7<=maximum",
                    f"<= {induced.maximum}",
                    apex,
                    passed=apex == 3 and apex <= induced.maximum,
                )

    def constructions(self) -> None:
        objective = {Family.APEX_TRIPARTITE: Objective.INDUCED_C5, Family.K2_BOOK: Objective.INDUCED_C4}
        for family, sizes in ((Family.APEX_TRIPARTITE, APEX_SIZES), (Family.K2_BOOK, BOOK_SIZES)):
            for n in sizes:
                g, spec = build(family, n)
                self.record(f"{family.value}.n={n}", spec.expected_count, self.count(objective[family], g))

    def exhaustive(self) -> None:
        top = 7 if self.fast else 8
        level = [SINGLE_VERTEX]
        sweep_graphs: list[Graph] = []
        euler_bad = 0
        for n in range(1, top + 1):
            if n > 1:
                level = next_level(level)
            if n <= 7:
                sweep_graphs.extend(level)
            for g in level:
                e = embed(g)
                if g.n - g.m + len(e.face_set) != 2:
                    euler_bad += 1
        sweep = lemma_one_sweep(sweep_graphs)
        self.record("basic_bound.violations.n<=7", 0, len(sweep.violations))
        self.record(f"euler.n<={top}", 0, euler_bad)

    def random_sample(self) -> None:
        rng = np.random.default_rng(0)
        trials = 50 if self.fast else 10_000
        mismatches = 0
        load_bad = 0
        for _ in range(trials):
            g = random_graph(int(rng.integers(5, 10)), float(rng.uniform(0.2, 0.7)), rng)
            expected = {
                Objective.INDUCED_C5: count_induced_pattern_oracle(g, C5),
                Objective.C5: count_pattern_oracle(g, C5),
                Objective.INDUCED_C4: count_induced_pattern_oracle(g, C4),
                Objective.C4: count_pattern_oracle(g, C4),
            }
            mismatches += sum(self.count(obj, g) != value for obj, value in expected.items())
            if sum(vertex_c5_loads(g)) != 5 * expected[Objective.INDUCED_C5]:
                load_bad += 1
        self.record(f"oracle_mismatches.random{trials}", 0, mismatches)
        self.record(f"load_identity.random{trials}", 0, load_bad)

    def resume(self) -> None:
        settings = self.settings.model_copy(update={"chunk_size": RESUME_CHUNK_SIZE})
        objectives = [Objective.C5, Objective.INDUCED_C5]
        evaluators = self.counters if self.injected else None
        straight = scan(RESUME_N, objectives, settings, evaluators=evaluators)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "resume.json")
            engine = ScanEngine(RESUME_N, objectives, settings, path, evaluators)
            stopped = engine.run(stop_after=RESUME_STOP_AFTER)
            resumed = ScanEngine(RESUME_N, objectives, settings, path, evaluators).run()
        self.record(
            f"resume_determinism.n={RESUME_N}",
            True,
            stopped is None
            and resumed is not None
            and all(resumed[o].identity() == straight[o].identity() for o in objectives),
        )

    def empty_k2k(self) -> None:
        book = embed(k2_book(11))
        self.record("empty_k2_7.k2_9", True, bool(find_empty_k2k(book, 7)))
        apex = embed(apex_tripartite(25))
        hits = {(w.u, w.w) for w in find_empty_k2k(apex, 7)}
        self.record("empty_k2_7.apex25", {(0, 1), (0, 2), (0, 3)}, hits & {(0, 1), (0, 2), (0, 3)})
        self.record("empty_k2_7.c5", 0, len(find_empty_k2k(embed(C5), 7)))


def run_verify_suite(
    fast: bool = False,
    counters: dict[Objective | str, Callable[[Graph], int]] | None = None,
    settings: Settings | None = None,
) -> VerifySuiteResult:
    """
    Recompute every published value this package can reach. `counters`
    replaces individual counting functions by objective name.
    """
    merged = dict(EVALUATORS)
    for key, fn in (counters or {}).items():
        merged[Objective(key)] = fn
    suite = _Suite(fast, merged, settings or get_settings(), injected=bool(counters))
    suite.constructions()
    suite.empty_k2k()
    suite.random_sample()
    suite.exhaustive()
    suite.scans()
    suite.resume()
    logger.info("verify suite: %d rows, passed=%s", len(suite.result.rows), suite.result.passed)
    return suite.result
