from planarc5.evaluation.verify_suite import ClaimRow, VerifySuiteResult, run_verify_suite

__all__ = ["ClaimRow", "VerifySuiteResult", "run_verify_suite"]
