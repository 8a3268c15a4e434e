from taulab.runner.checks.context import AlgebraContext
from taulab.runner.checks.nakayama_checker import NakayamaChecker
from taulab.runner.checks.reflexive_checker import ReflexiveChecker
from taulab.runner.checks.theorem_checker import TheoremChecker

__all__ = ["AlgebraContext", "NakayamaChecker", "ReflexiveChecker", "TheoremChecker"]
