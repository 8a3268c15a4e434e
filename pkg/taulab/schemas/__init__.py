from taulab.schemas.algebra_file import AlgebraFile, ArrowSpec, KupischSpec, ModuleSpec, QuiverSpec, TermSpec
from taulab.schemas.report import AlgebraInfo, ClassReport, ComputeResult, Failure, RunConfig, VerifyResult

__all__ = [
    "AlgebraFile",
    "AlgebraInfo",
    "ArrowSpec",
    "ClassReport",
    "ComputeResult",
    "Failure",
    "KupischSpec",
    "ModuleSpec",
    "QuiverSpec",
    "RunConfig",
    "TermSpec",
    "VerifyResult",
]
