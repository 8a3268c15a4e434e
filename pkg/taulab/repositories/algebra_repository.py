"""
Algebra files on disk and the built-in example files shipped in taulab/data.
Parsing errors carry a location: line:column for malformed JSON, the field path for
schema violations.
"""
import json
import logging
from importlib import resources
from pathlib import Path

from pydantic import ValidationError

from taulab.algebra.algebra import Algebra
from taulab.algebra.builder import build_algebra
from taulab.algebra.kupisch import KupischSeries, nakayama_from_kupisch
from taulab.algebra.quiver import AlgebraPresentation, Arrow, Quiver, Relation
from taulab.config import get_settings
from taulab.core.field import PrimeField
from taulab.exceptions import ParseError
from taulab.modrep.rep import Rep
from taulab.schemas.algebra_file import AlgebraFile, KupischSpec, ModuleSpec

logger = logging.getLogger(__name__)

BUILTIN_PACKAGE = "taulab.data"


def parse(text: str, source: str = "<input>") -> AlgebraFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"{source}:{e.lineno}:{e.colno}") from None
    try:
        return AlgebraFile.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "root"
        raise ParseError(first["msg"], f"{source}:{where}") from None


def load(path: str | Path) -> AlgebraFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(e.strerror or str(e), str(path)) from None
    return parse(text, str(path))


def save(path: str | Path, spec: AlgebraFile) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(spec.model_dump_json(by_alias=True, exclude_none=True, exclude_defaults=True, indent=2) + "\n", encoding="utf-8")
    return path


def kupisch_file(series: KupischSeries) -> AlgebraFile:
    return AlgebraFile(kupisch=KupischSpec(series=list(series.lengths), cyclic=series.cyclic))


def to_presentation(spec: AlgebraFile, default_label: str = "") -> AlgebraPresentation:
    settings = get_settings()
    limit = spec.max_path_length or settings.max_path_length
    if spec.kupisch is not None:
        series = KupischSeries(tuple(spec.kupisch.series), spec.kupisch.cyclic)
        pres = nakayama_from_kupisch(series, max_path_length=limit)
        if spec.label:
            pres = AlgebraPresentation(pres.quiver, pres.relations, limit, series, spec.label)
        return pres
    quiver = Quiver(spec.quiver.vertices, tuple(Arrow(a.name, a.source, a.target) for a in spec.quiver.arrows))
    relations = tuple(Relation(tuple((t.coef, tuple(t.path)) for t in terms)) for terms in spec.relations)
    return AlgebraPresentation(quiver, relations, limit, None, spec.label or default_label)


def build_from_spec(spec: AlgebraFile, field_prime: int | None = None, default_label: str = "") -> Algebra:
    """Build the algebra; the characteristic is field_prime, else the file's, else the configured one."""
    p = field_prime or spec.field or get_settings().field_prime
    return build_algebra(to_presentation(spec, default_label), PrimeField(p))


def load_algebra(path: str | Path, field_prime: int | None = None) -> tuple[Algebra, AlgebraFile]:
    spec = load(path)
    algebra = build_from_spec(spec, field_prime, Path(path).stem)
    logger.info("loaded %s from %s", algebra.label, path)
    return algebra, spec


def module_from_spec(algebra: Algebra, spec: ModuleSpec) -> Rep:
    """An explicit module; always checked against the relations."""
    return Rep(algebra, tuple(spec.dims), spec.action, spec.name or "").validate()


def named_modules(algebra: Algebra, spec: AlgebraFile) -> dict[str, Rep]:
    return {m.name: module_from_spec(algebra, m) for m in spec.modules if m.name}


def builtin_names() -> list[str]:
    return sorted(
        entry.name[: -len(".json")]
        for entry in resources.files(BUILTIN_PACKAGE).iterdir()
        if entry.name.endswith(".json")
    )


def load_builtin(name: str) -> AlgebraFile:
    entry = resources.files(BUILTIN_PACKAGE) / f"{name}.json"
    if not entry.is_file():
        raise ParseError(f"no built-in algebra named {name!r}", name)
    return parse(entry.read_text(encoding="utf-8"), name)


def builtin_algebra(name: str, field_prime: int | None = None) -> Algebra:
    return build_from_spec(load_builtin(name), field_prime, name)
