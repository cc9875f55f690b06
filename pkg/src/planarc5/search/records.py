# src/planarc5/search/records.py
from __future__ import annotations

from enum import Enum
from typing import Callable

import pandas as pd
from pydantic import BaseModel

from planarc5.counting.cycles import count_c4, count_c5
from planarc5.graphs.base import Graph
from planarc5.lemmas.regions import min_vertex_load


class Objective(str, Enum):
    INDUCED_C5 = "induced_c5"
    C5 = "c5"
    INDUCED_C4 = "induced_c4"
    C4 = "c4"
    MIN_C5_LOAD = "min_c5_load"


def _induced_c5(g: Graph) -> int:
    return count_c5(g, induced=True)


def _c5(g: Graph) -> int:
    return count_c5(g)


def _induced_c4(g: Graph) -> int:
    return count_c4(g, induced=True)


def _c4(g: Graph) -> int:
    return count_c4(g)


def _min_c5_load(g: Graph) -> int:
    return min_vertex_load(g)[1]


Evaluator = Callable[[Graph], int]

EVALUATORS: dict[Objective, Evaluator] = {
    Objective.INDUCED_C5: _induced_c5,
    Objective.C5: _c5,
    Objective.INDUCED_C4: _induced_c4,
    Objective.C4: _c4,
    Objective.MIN_C5_LOAD: _min_c5_load,
}


class Tally(BaseModel):
    """Running histogram and arg-max for one objective."""

    histogram: dict[int, int] = {}
    maximum: int | None = None
    witnesses: list[str] = []
    visited: int = 0

    def add(self, value: int, graph6: Callable[[], str]) -> None:
        self.visited += 1
        self.histogram[value] = self.histogram.get(value, 0) + 1
        if self.maximum is None or value > self.maximum:
            self.maximum = value
            self.witnesses = [graph6()]
        elif value == self.maximum:
            self.witnesses.append(graph6())

    def merge(self, other: Tally) -> None:
        self.visited += other.visited
        for value, freq in other.histogram.items():
            self.histogram[value] = self.histogram.get(value, 0) + freq
        if other.maximum is None:
            return
        if self.maximum is None or other.maximum > self.maximum:
            self.maximum = other.maximum
            self.witnesses = list(other.witnesses)
        elif other.maximum == self.maximum:
            self.witnesses.extend(other.witnesses)


class ExtremalRecord(BaseModel):
    n: int
    objective: Objective
    maximum: int
    witnesses: list[str]
    histogram: dict[int, int]
    graphs_visited: int
    elapsed: float

    @classmethod
    def from_tally(cls, n: int, objective: Objective, tally: Tally, elapsed: float) -> ExtremalRecord:
        return cls(
            n=n,
            objective=objective,
            maximum=tally.maximum if tally.maximum is not None else 0,
            witnesses=sorted(set(tally.witnesses)),
            histogram=dict(sorted(tally.histogram.items())),
            graphs_visited=tally.visited,
            elapsed=round(elapsed, 3),
        )

    def identity(self) -> dict:
        """Everything except wall time; equal across interrupted and uninterrupted runs."""
        return self.model_dump(mode="json", exclude={"elapsed"})


def records_to_frame(records: list[ExtremalRecord]) -> pd.DataFrame:
    rows = [
        {
            "n": r.n,
            "objective": r.objective.value,
            "maximum": r.maximum,
            "witness_count": len(r.witnesses),
            "graphs_visited": r.graphs_visited,
            "elapsed": r.elapsed,
        }
        for r in records
    ]
    return pd.DataFrame(
        rows, columns=["n", "objective", "maximum", "witness_count", "graphs_visited", "elapsed"]
    )
