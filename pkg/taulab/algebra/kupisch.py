"""Kupisch series and the Nakayama algebras they determine."""
from dataclasses import dataclass

from taulab.algebra.quiver import AlgebraPresentation, Arrow, Quiver, Relation
from taulab.exceptions import InvalidKupisch


@dataclass(frozen=True)
class KupischSeries:
    lengths: tuple[int, ...]
    cyclic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(c) for c in self.lengths))

    @property
    def n(self) -> int:
        return len(self.lengths)

    def validate(self) -> "KupischSeries":
        c, n = self.lengths, self.n
        if n == 0:
            raise InvalidKupisch("Kupisch series must be non-empty")
        if any(x < 1 for x in c):
            raise InvalidKupisch(f"Kupisch lengths must be positive: {list(c)}")
        if self.cyclic:
            if any(x < 2 for x in c):
                raise InvalidKupisch(f"cyclic Kupisch series needs every c_i >= 2: {list(c)}")
            for i in range(n):
                if c[(i + 1) % n] < c[i] - 1:
                    raise InvalidKupisch(f"c_{(i + 1) % n} < c_{i} - 1 in {list(c)}")
        else:
            if c[-1] != 1:
                raise InvalidKupisch(f"linear Kupisch series must end in 1: {list(c)}")
            for i in range(n - 1):
                if c[i] < 2:
                    raise InvalidKupisch(f"c_{i} = 1 is only allowed at the last vertex: {list(c)}")
                if c[i + 1] < c[i] - 1:
                    raise InvalidKupisch(f"c_{i + 1} < c_{i} - 1 in {list(c)}")
        return self

    def canonical(self) -> "KupischSeries":
        """Lexicographically smallest rotation for cyclic series; linear ones are unchanged."""
        if not self.cyclic:
            return self
        c = self.lengths
        best = min(c[i:] + c[:i] for i in range(len(c)))
        return KupischSeries(best, True)

    @property
    def label(self) -> str:
        kind = "cyclic" if self.cyclic else "linear"
        return f"{kind}[{','.join(str(x) for x in self.lengths)}]"

    def is_selfinjective_shape(self) -> bool:
        """Classical criterion: cyclic with constant series, or the semisimple linear [1]."""
        if self.cyclic:
            return len(set(self.lengths)) == 1
        return self.lengths == (1,)


def nakayama_from_kupisch(series: KupischSeries, max_path_length: int = 64) -> AlgebraPresentation:
    series.validate()
    n = series.n
    if series.cyclic:
        arrows = tuple(Arrow(f"a{i}", i, (i + 1) % n) for i in range(n))
    else:
        arrows = tuple(Arrow(f"a{i}", i, i + 1) for i in range(n - 1))
    relations = []
    for i, c in enumerate(series.lengths):
        if not series.cyclic and i + c > n - 1:
            continue
        word = tuple(f"a{(i + k) % n}" for k in range(c))
        relations.append(Relation(((1, word),)))
    return AlgebraPresentation(
        quiver=Quiver(n, arrows),
        relations=tuple(relations),
        max_path_length=max_path_length,
        kupisch=series,
        label=series.label,
    )
