"""Shared state for the checkers of one algebra: its indecomposables and sampled direct sums."""
import functools
import logging
from functools import cached_property

import numpy as np

from taulab.algebra.algebra import Algebra
from taulab.config import get_settings
from taulab.exceptions import TaulabError
from taulab.homfun.indecomposables import enumerate_indecomposables
from taulab.modrep.constructions import regular_module
from taulab.modrep.covers import is_injective, is_projective
from taulab.modrep.rep import Rep, direct_sum

logger = logging.getLogger(__name__)


class AlgebraContext:
    def __init__(self, algebra: Algebra, seed: int | None = None, samples: int | None = None):
        settings = get_settings()
        self.algebra = algebra
        self.seed = settings.seed if seed is None else seed
        self.samples = settings.random_sums if samples is None else samples

    @cached_property
    def indecomposables(self) -> list[Rep]:
        return enumerate_indecomposables(self.algebra, self.seed)

    @cached_property
    def non_projective(self) -> list[Rep]:
        return [m for m in self.indecomposables if not is_projective(m)]

    @cached_property
    def non_injective(self) -> list[Rep]:
        return [m for m in self.indecomposables if not is_injective(m)]

    @cached_property
    def regular(self) -> Rep:
        return regular_module(self.algebra)

    @cached_property
    def random_sums(self) -> list[Rep]:
        """Direct sums of two or three indecomposables, drawn with the context seed."""
        mods = self.indecomposables
        if not mods:
            return []
        rng = np.random.default_rng(self.seed)
        out = []
        for _ in range(self.samples):
            count = int(rng.integers(2, 4))
            picks = rng.integers(0, len(mods), size=count)
            out.append(direct_sum(*(mods[int(k)] for k in picks)))
        return out


def failure(module: Rep | str, expected, got) -> dict:
    name = module if isinstance(module, str) else (module.label or f"dims{list(module.dims)}")
    return {"module": name, "expected": str(expected), "got": str(got)}


def outcome(checked: int, failures: list[dict], message: str | None = None) -> dict:
    return {"status": not failures, "checked": checked, "failures": failures, "message": message}


def skipped(message: str) -> dict:
    return {"status": True, "checked": 0, "failures": [], "message": f"skipped: {message}"}


def guarded(method):
    """Turn an engine error into an error result instead of a pass or a crash."""

    @functools.wraps(method)
    def wrapper(self, *args, **kwargs):
        try:
            return method(self, *args, **kwargs)
        except TaulabError as e:
            logger.warning("%s failed on %s: %s", method.__name__, self.ctx.algebra.label, e)
            return {"status": None, "checked": 0, "failures": [], "message": str(e), "error": type(e).__name__}

    return wrapper
