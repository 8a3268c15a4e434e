from pydantic import BaseModel


class ClassReport(BaseModel):
    """One classification row for an indecomposable module."""
    module: str
    dims: list[int]
    projective: bool
    injective: bool
    ext1_A: int
    ext2_A: int
    tr_reflexive: bool
    tau_perfect: bool | None  # None for projectives
    tau_inv_perfect: bool | None  # None for injectives
    reflexive: bool
    torsionless: bool
    gorenstein_projective: bool | None  # None when the algebra is not Iwanaga-Gorenstein
    dominant_dim: int | str


class Failure(BaseModel):
    module: str
    expected: str
    got: str


class VerifyResult(BaseModel):
    suite: str
    algebra: str
    status: str  # passed | failed | error
    checked: int
    failures: list[Failure] = []
    message: str | None = None
    error: str | None = None  # exception class name when status is "error"


class RunConfig(BaseModel):
    """Per-invocation values after command-line overrides."""
    field_prime: int
    seed: int
    max_path_length: int
    max_resolution: int
    output_format: str


class AlgebraInfo(BaseModel):
    label: str
    field: int
    dim: int
    vertices: int
    kupisch: str | None = None
    semisimple: bool
    selfinjective: bool
    injective_dimensions: list[int | None]
    ig_degree: int | None
    dominant_dimension: int | str
    f: list[int] | None  # idempotent of the minimal faithful projective-injective left module
    projective_injective: list[int]  # vertices v with e_vA injective
    summary: str


class ComputeResult(BaseModel):
    algebra: str
    expression: str
    operations: list[str]
    result: str
    dims: list[int] | None = None
    over_opposite: bool = False
    value: bool | int | str | None = None
