"""Checks on the transpose duality, the evaluation map and dominant dimension."""
from taulab.exceptions import NoFaithfulProjInj
from taulab.homfun.dominant import dominant_dimension, dominant_dimension_algebra, f_restrict, minimal_faithful_proj_inj
from taulab.homfun.duality import REFLEXIVITY_METHODS, a_dual, is_reflexive
from taulab.homfun.transpose import transpose
from taulab.modrep.covers import syzygy
from taulab.modrep.decompose import strip_projectives
from taulab.modrep.hom import hom_dim, is_isomorphic
from taulab.modrep.nakayama import describe
from taulab.runner.checks.context import AlgebraContext, failure, guarded, outcome, skipped


class ReflexiveChecker:
    def __init__(self, ctx: AlgebraContext):
        self.ctx = ctx

    @guarded
    def check_reflexive_equivalences(self):
        """The three reflexivity tests agree, on indecomposables and on sampled direct sums."""
        seed = self.ctx.seed
        modules = self.ctx.indecomposables + self.ctx.random_sums
        failures = []
        for m in modules:
            answers = {method: is_reflexive(m, method, seed) for method in REFLEXIVITY_METHODS}
            if len(set(answers.values())) != 1:
                failures.append(failure(m, "all methods agree", answers))
        return outcome(len(modules), failures)

    @guarded
    def check_trtr(self):
        """Tr Tr X = X up to projective summands."""
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            back = strip_projectives(transpose(transpose(x)), seed)
            if not is_isomorphic(back, x, seed):
                failures.append(failure(x, x.label, describe(back, seed)))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_lemma_dual_syzygy(self):
        """X* = Omega^2 Tr X over the opposite algebra, on the nose."""
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            star, omega = a_dual(x), syzygy(transpose(x), 2)
            if not is_isomorphic(star, omega, seed):
                failures.append(failure(x, f"dims{list(star.dims)}", f"dims{list(omega.dims)}"))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_reflexive_double_transpose(self):
        """X reflexive iff Omega^2 Tr Omega^2 Tr X = X."""
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            reflexive = is_reflexive(x, seed=seed)
            twice = syzygy(transpose(syzygy(transpose(x), 2)), 2)
            same = is_isomorphic(twice, x, seed)
            if reflexive != same:
                failures.append(failure(x, f"reflexive={reflexive}", f"Omega2TrOmega2Tr_iso={same}"))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_domdim_reflexive(self):
        """With domdim A >= 2: reflexive iff domdim >= 2, and Hom is preserved by M -> Mf on reflexives."""
        a = self.ctx.algebra
        seed = self.ctx.seed
        domdim = dominant_dimension_algebra(a)
        if not domdim.at_least(2):
            return skipped(f"dominant dimension {domdim}")
        try:
            f = minimal_faithful_proj_inj(a)
        except NoFaithfulProjInj as e:
            return skipped(str(e))
        failures = []
        reflexive = []
        for m in self.ctx.indecomposables:
            refl = is_reflexive(m, seed=seed)
            dd = dominant_dimension(m)
            if refl != dd.at_least(2):
                failures.append(failure(m, f"reflexive={refl}", f"dominant_dimension={dd}"))
            if refl:
                reflexive.append((m, f_restrict(m, f)))
        checked = len(self.ctx.indecomposables)
        for m, mf in reflexive:
            for n, nf in reflexive:
                checked += 1
                left, right = hom_dim(m, n), hom_dim(mf, nf)
                if left != right:
                    failures.append(failure(f"Hom({m.label}, {n.label})", left, right))
        return outcome(checked, failures)
