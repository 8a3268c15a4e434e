"""Desk-scale corpora: every valid Kupisch series up to a size, plus the shipped bound-quiver examples."""
import itertools
import logging
import re
from pathlib import Path

from taulab.algebra.algebra import Algebra
from taulab.algebra.kupisch import KupischSeries
from taulab.exceptions import InvalidKupisch, ParseError
from taulab.repositories import algebra_repository
from taulab.schemas.algebra_file import AlgebraFile

logger = logging.getLogger(__name__)

ORIENTATIONS = ("both", "linear", "cyclic")


def parse_corpus_spec(text: str) -> tuple[int, int]:
    """"n,c" -> (max vertices, max length)."""
    match = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not match:
        raise ParseError(f"corpus spec must look like 'n,c', got {text!r}", "--corpus")
    n, c = int(match.group(1)), int(match.group(2))
    if n < 1 or c < 1:
        raise ParseError("corpus bounds must be >= 1", "--corpus")
    return n, c


def kupisch_series(max_vertices: int, max_length: int, orientation: str = "both") -> list[KupischSeries]:
    """Valid series with n <= max_vertices and every c_i <= max_length; cyclic ones up to rotation."""
    if orientation not in ORIENTATIONS:
        raise ParseError(f"orientation must be one of {', '.join(ORIENTATIONS)}", "orientation")
    kinds = {"both": (False, True), "linear": (False,), "cyclic": (True,)}[orientation]
    out: list[KupischSeries] = []
    seen: set[KupischSeries] = set()
    for n in range(1, max_vertices + 1):
        for cyclic in kinds:
            for lengths in itertools.product(range(1, max_length + 1), repeat=n):
                try:
                    series = KupischSeries(lengths, cyclic).validate().canonical()
                except InvalidKupisch:
                    continue
                if series not in seen:
                    seen.add(series)
                    out.append(series)
    logger.info("corpus n<=%d c<=%d (%s): %d Kupisch series", max_vertices, max_length, orientation, len(out))
    return out


def corpus_files(max_vertices: int, max_length: int, orientation: str = "both",
                 builtins: bool = True) -> list[tuple[str, AlgebraFile]]:
    files = []
    for series in kupisch_series(max_vertices, max_length, orientation):
        kind = "cyclic" if series.cyclic else "linear"
        files.append((f"{kind}_{'_'.join(str(c) for c in series.lengths)}", algebra_repository.kupisch_file(series)))
    if builtins:
        files.extend((name, algebra_repository.load_builtin(name)) for name in algebra_repository.builtin_names())
    return files


def corpus_algebras(max_vertices: int, max_length: int, orientation: str = "both", builtins: bool = True,
                    field_prime: int | None = None) -> list[Algebra]:
    return [
        algebra_repository.build_from_spec(spec, field_prime, name)
        for name, spec in corpus_files(max_vertices, max_length, orientation, builtins)
    ]


def write_corpus(out_dir: str | Path, files: list[tuple[str, AlgebraFile]]) -> list[Path]:
    out_dir = Path(out_dir)
    return [algebra_repository.save(out_dir / f"{name}.json", spec) for name, spec in files]
