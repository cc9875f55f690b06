from planarc5.search.checkpoint import Checkpoint, checkpoint_load, checkpoint_resume, checkpoint_save
from planarc5.search.engine import ScanEngine, extremal_scan, scan
from planarc5.search.enumerate import children, enumerate_planar, planar_levels
from planarc5.search.records import EVALUATORS, ExtremalRecord, Objective, Tally, records_to_frame

__all__ = [
    "EVALUATORS",
    "Checkpoint",
    "ExtremalRecord",
    "Objective",
    "ScanEngine",
    "Tally",
    "checkpoint_load",
    "checkpoint_resume",
    "checkpoint_save",
    "children",
    "enumerate_planar",
    "extremal_scan",
    "planar_levels",
    "records_to_frame",
    "scan",
]
