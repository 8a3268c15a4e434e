from taulab.runner.runner import SUITES, VerifyRunner, resolve_suites

__all__ = ["SUITES", "VerifyRunner", "resolve_suites"]
