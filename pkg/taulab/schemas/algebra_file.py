"""The JSON algebra file: a Kupisch series or a quiver with relations, plus optional named modules."""
from pydantic import BaseModel, Field, field_validator, model_validator


class ArrowSpec(BaseModel):
    name: str
    source: int = Field(alias="from", ge=0)
    target: int = Field(alias="to", ge=0)

    class Config:
        populate_by_name = True


class QuiverSpec(BaseModel):
    vertices: int = Field(ge=1)
    arrows: list[ArrowSpec] = []


class TermSpec(BaseModel):
    coef: int = 1
    path: list[str]


class KupischSpec(BaseModel):
    series: list[int]
    cyclic: bool = False

    @field_validator("series")
    @classmethod
    def _non_empty(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("series must be non-empty")
        return value


class ModuleSpec(BaseModel):
    """An explicit module: dimension vector and one matrix (list of rows) per arrow."""
    name: str | None = None
    dims: list[int]
    action: dict[str, list[list[int]]] = {}


class AlgebraFile(BaseModel):
    field: int | None = None
    label: str | None = None
    kupisch: KupischSpec | None = None
    quiver: QuiverSpec | None = None
    relations: list[list[TermSpec]] = []
    max_path_length: int | None = Field(default=None, ge=1)
    modules: list[ModuleSpec] = []

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "AlgebraFile":
        if (self.kupisch is None) == (self.quiver is None):
            raise ValueError("give exactly one of 'kupisch' or 'quiver'")
        if self.kupisch is not None and self.relations:
            raise ValueError("'relations' only apply to a 'quiver' algebra")
        return self
