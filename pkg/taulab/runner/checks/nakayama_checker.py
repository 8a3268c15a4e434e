"""Closed-form translates of uniserials and the reproducibility of decompositions."""
from taulab.homfun.oracle import tau_inv_label, tau_label, uniserial_labels
from taulab.homfun.transpose import ar_translate, ar_translate_inv
from taulab.modrep.decompose import decompose, hom_fingerprint, same_summands
from taulab.modrep.hom import is_isomorphic
from taulab.modrep.nakayama import describe, pj_module
from taulab.modrep.rep import zero_module
from taulab.runner.checks.context import AlgebraContext, failure, guarded, outcome, skipped

FINGERPRINT_SUMS = 10


class NakayamaChecker:
    def __init__(self, ctx: AlgebraContext):
        self.ctx = ctx

    def _expected(self, label: str):
        a = self.ctx.algebra
        if label == "0":
            return zero_module(a)
        i, k = (int(x) for x in label[3:-1].split(","))
        return pj_module(a, i, k)

    @guarded
    def check_nakayama_oracle(self):
        a = self.ctx.algebra
        series = a.kupisch
        if series is None:
            return skipped("algebra has no Kupisch series")
        seed = self.ctx.seed
        failures = []
        pairs = uniserial_labels(series)
        for i, k in pairs:
            m = pj_module(a, i, k)
            for name, functor, expected in (
                ("tau", ar_translate, tau_label(series, i, k)),
                ("tau_inv", ar_translate_inv, tau_inv_label(series, i, k)),
            ):
                got = functor(m)
                if not is_isomorphic(got, self._expected(expected), seed):
                    failures.append(failure(f"{name} {m.label}", expected, describe(got, seed)))
        return outcome(len(pairs), failures)

    @guarded
    def check_krull_schmidt(self):
        """Two seeds give the same summands; on Nakayama algebras Hom fingerprints separate classes."""
        seed = self.ctx.seed
        modules = self.ctx.indecomposables + self.ctx.random_sums
        failures = []
        for m in modules:
            first, second = decompose(m, seed), decompose(m, seed + 1)
            if not same_summands(first, second, seed):
                failures.append(failure(m, f"{len(first)} summands", f"{len(second)} summands with another seed"))
        checked = len(modules)
        if self.ctx.algebra.kupisch is not None:
            family = self.ctx.indecomposables
            sample = family + self.ctx.random_sums[:FINGERPRINT_SUMS]
            prints = [hom_fingerprint(m, family) for m in sample]
            for p, m in enumerate(sample):
                for q in range(p + 1, len(sample)):
                    checked += 1
                    iso = is_isomorphic(m, sample[q], seed)
                    if iso != (prints[p] == prints[q]):
                        failures.append(failure(m, f"fingerprint_match={prints[p] == prints[q]}", f"isomorphic={iso}"))
        return outcome(checked, failures)
