import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Sequence

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import ParseError
from taulab.runner.checks.context import AlgebraContext
from taulab.runner.checks.nakayama_checker import NakayamaChecker
from taulab.runner.checks.reflexive_checker import ReflexiveChecker
from taulab.runner.checks.theorem_checker import TheoremChecker
from taulab.runner.formatter import format_result
from taulab.runner.scoring import SuiteTally
from taulab.schemas.report import VerifyResult

logger = logging.getLogger(__name__)

SUITES = {
    "main-theorem": (TheoremChecker, "check_main_theorem"),
    "dual-theorem": (TheoremChecker, "check_dual_theorem"),
    "reflexive-equivalences": (ReflexiveChecker, "check_reflexive_equivalences"),
    "trtr": (ReflexiveChecker, "check_trtr"),
    "lemma-dual-syzygy": (ReflexiveChecker, "check_lemma_dual_syzygy"),
    "per-tau-bijection": (TheoremChecker, "check_per_tau_bijection"),
    "per-tau-inv-bijection": (TheoremChecker, "check_per_tau_inv_bijection"),
    "selfinjective-criterion": (TheoremChecker, "check_selfinjective_criterion"),
    "gp-equals-tau-perfect": (TheoremChecker, "check_gp_equals_tau_perfect"),
    "domdim-reflexive": (ReflexiveChecker, "check_domdim_reflexive"),
    "nakayama-oracle": (NakayamaChecker, "check_nakayama_oracle"),
    "selfinjective-commutation": (TheoremChecker, "check_selfinjective_commutation"),
    "reflexive-double-transpose": (ReflexiveChecker, "check_reflexive_double_transpose"),
    "krull-schmidt": (NakayamaChecker, "check_krull_schmidt"),
    "nu-projective-injective": (TheoremChecker, "check_nu_projective_injective"),
}


def resolve_suites(name: str) -> list[str]:
    if name == "all":
        return list(SUITES)
    if name not in SUITES:
        raise ParseError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}", "suite")
    return [name]


class VerifyRunner:

    def __init__(self, algebras: Sequence[Algebra], suites: Sequence[str], seed: int | None = None,
                 samples: int | None = None, workers: int | None = None):
        self.algebras = list(algebras)
        self.suites = list(suites)
        self.seed = seed
        self.samples = samples
        self.workers = workers or get_settings().workers
        self.tally = SuiteTally()

    def _run_algebra(self, algebra: Algebra) -> list[VerifyResult]:
        ctx = AlgebraContext(algebra, self.seed, self.samples)
        checkers = {}
        results = []
        for suite in self.suites:
            cls, method = SUITES[suite]
            checker = checkers.setdefault(cls, cls(ctx))
            raw = getattr(checker, method)()
            result = format_result(suite, algebra.label, raw)
            logger.info("%s on %s: %s (%d checked)", suite, algebra.label, result.status, result.checked)
            results.append(result)
        return results

    def run(self) -> Iterator[dict]:
        yield {"event": "start", "algebras": len(self.algebras), "suites": self.suites}

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            batches = list(executor.map(self._run_algebra, self.algebras))

        results = sorted((r for batch in batches for r in batch), key=lambda r: (r.suite, r.algebra))
        for result in results:
            self.tally.add(result)
            yield {"event": "result", "result": result}

        yield {"event": "finished", "summary": self.tally.summary()}

    def results(self) -> list[VerifyResult]:
        return [e["result"] for e in self.run() if e["event"] == "result"]
