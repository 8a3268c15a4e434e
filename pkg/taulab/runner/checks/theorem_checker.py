"""Checks around tau-perfect modules: the Ext / transpose / translate equivalences and their consequences."""
from taulab.homfun.duality import is_coreflexive, is_reflexive, nu
from taulab.homfun.ext import ext_vanishes, is_gorenstein_projective, is_selfinjective, iwanaga_gorenstein_degree
from taulab.homfun.perfect import is_tau_inv_perfect, is_tau_perfect, omega_nu_commutes, tau_perfect_sides
from taulab.homfun.transpose import ar_translate, ar_translate_inv, transpose
from taulab.modrep.constructions import injective_module, k_dual, projective_module, simple_module
from taulab.modrep.covers import is_projective
from taulab.modrep.decompose import strip_injectives, strip_projectives
from taulab.modrep.hom import is_isomorphic
from taulab.modrep.nakayama import describe
from taulab.runner.checks.context import AlgebraContext, failure, guarded, outcome, skipped


class TheoremChecker:
    def __init__(self, ctx: AlgebraContext):
        self.ctx = ctx

    @guarded
    def check_main_theorem(self):
        """Ext^1(X,A) = Ext^2(X,A) = 0, Tr X reflexive, and tau X = nu Omega^2 X agree."""
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            ext = ext_vanishes(x, (1, 2))
            tr = is_reflexive(transpose(x))
            perfect = is_tau_perfect(x, seed)
            if not ext == tr == perfect:
                failures.append(failure(x, f"ext_vanish={ext}", f"tr_reflexive={tr}, tau_perfect={perfect}"))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_dual_theorem(self):
        """tau^-1-perfect X against the opposite-algebra conditions on D X."""
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_injective:
            dx = k_dual(x)
            inv_perfect = is_tau_inv_perfect(x, seed)
            ext = ext_vanishes(dx, (1, 2))
            tr = is_reflexive(transpose(dx))
            op_perfect = is_tau_perfect(dx, seed)
            if not inv_perfect == ext == tr == op_perfect:
                failures.append(failure(
                    x,
                    f"tau_inv_perfect={inv_perfect}",
                    f"ext_vanish_op={ext}, tr_d_reflexive={tr}, d_tau_perfect_op={op_perfect}",
                ))
        return outcome(len(self.ctx.non_injective), failures)

    @guarded
    def check_per_tau_bijection(self):
        """tau: tau-perfect non-projectives -> coreflexive non-injectives, inverted by tau^-1."""
        seed = self.ctx.seed
        sources = [x for x in self.ctx.non_projective if is_tau_perfect(x, seed)]
        targets = [y for y in self.ctx.non_injective if is_coreflexive(y, seed=seed)]
        return self._bijection(sources, targets, ar_translate, ar_translate_inv, strip_injectives, strip_projectives)

    @guarded
    def check_per_tau_inv_bijection(self):
        """tau^-1: tau^-1-perfect non-injectives -> reflexive non-projectives, inverted by tau."""
        seed = self.ctx.seed
        sources = [x for x in self.ctx.non_injective if is_tau_inv_perfect(x, seed)]
        targets = [y for y in self.ctx.non_projective if is_reflexive(y, seed=seed)]
        return self._bijection(sources, targets, ar_translate_inv, ar_translate, strip_projectives, strip_injectives)

    def _bijection(self, sources, targets, forward, backward, strip_target, strip_source):
        seed = self.ctx.seed
        failures = []
        hit = [0] * len(targets)
        for x in sources:
            image = strip_target(forward(x), seed)
            matches = [k for k, y in enumerate(targets) if is_isomorphic(image, y, seed)]
            if len(matches) != 1:
                failures.append(failure(x, "exactly one class in the target", describe(image, seed)))
                continue
            hit[matches[0]] += 1
            back = strip_source(backward(image), seed)
            if not is_isomorphic(back, x, seed):
                failures.append(failure(x, x.label, f"round trip gives {describe(back, seed)}"))
        for y, count in zip(targets, hit):
            if count != 1:
                failures.append(failure(y, "hit once", f"hit {count} times"))
        return outcome(len(sources) + len(targets), failures)

    @guarded
    def check_selfinjective_criterion(self):
        """A is selfinjective iff every non-projective simple is tau-perfect."""
        a = self.ctx.algebra
        seed = self.ctx.seed
        selfinjective = is_selfinjective(a)
        simples = [simple_module(a, v) for v in range(a.vertex_count)]
        perfect = all(is_tau_perfect(s, seed) for s in simples if not is_projective(s))
        failures = []
        if selfinjective != perfect:
            failures.append(failure(a.label, f"selfinjective={selfinjective}", f"simples_tau_perfect={perfect}"))
        if a.kupisch is not None and selfinjective != a.kupisch.is_selfinjective_shape():
            failures.append(failure(
                a.label, f"kupisch_selfinjective={a.kupisch.is_selfinjective_shape()}", f"selfinjective={selfinjective}",
            ))
        return outcome(len(simples), failures)

    @guarded
    def check_gp_equals_tau_perfect(self):
        degree = iwanaga_gorenstein_degree(self.ctx.algebra)
        if degree is None or degree > 2:
            return skipped(f"Iwanaga-Gorenstein degree {degree if degree is not None else 'undetermined'}")
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            gp, perfect = is_gorenstein_projective(x), is_tau_perfect(x, seed)
            if gp != perfect:
                failures.append(failure(x, f"gorenstein_projective={gp}", f"tau_perfect={perfect}"))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_selfinjective_commutation(self):
        """Over a selfinjective algebra tau X, nu Omega^2 X and Omega^2 nu X coincide."""
        if not is_selfinjective(self.ctx.algebra):
            return skipped("algebra is not selfinjective")
        seed = self.ctx.seed
        failures = []
        for x in self.ctx.non_projective:
            tau, nu_omega = tau_perfect_sides(x)
            if not is_isomorphic(tau, nu_omega, seed):
                failures.append(failure(x, describe(tau, seed), f"nu Omega^2 = {describe(nu_omega, seed)}"))
            elif not omega_nu_commutes(x, seed):
                failures.append(failure(x, describe(tau, seed), "Omega^2 nu differs"))
        return outcome(len(self.ctx.non_projective), failures)

    @guarded
    def check_nu_projective_injective(self):
        a = self.ctx.algebra
        seed = self.ctx.seed
        failures = []
        for v in range(a.vertex_count):
            image = nu(projective_module(a, v))
            if not is_isomorphic(image, injective_module(a, v), seed):
                failures.append(failure(f"P({v})", f"I({v})", describe(image, seed)))
        return outcome(a.vertex_count, failures)
