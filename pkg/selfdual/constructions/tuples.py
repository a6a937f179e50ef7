from collections.abc import Iterable
from dataclasses import dataclass

from selfdual.errors import InvalidTuple
from selfdual.planar_map.abstract import DegreeSequence


@dataclass(frozen=True)
class DegreeTuple:
    """T = (t_1, ..., t_k) with every t_i >= 4; P(T) realises t_1..t_k followed by m(T) threes."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        bad = [t for t in self.entries if t < 4]
        if bad:
            raise InvalidTuple(f"tuple entries must be at least 4, got {bad}")

    @classmethod
    def of(cls, entries: Iterable[int]) -> "DegreeTuple":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "DegreeTuple":
        text = text.strip().strip("()")
        try:
            return cls(tuple(int(item) for item in text.split(",") if item.strip()))
        except ValueError as exc:
            raise InvalidTuple(f"cannot read a tuple from {text!r}") from exc

    @classmethod
    def from_sequence(cls, sequence: DegreeSequence) -> "DegreeTuple":
        """Entries >= 4 of an admissible sequence; the number of threes must equal m(T)."""
        if any(d < 3 for d in sequence):
            raise InvalidTuple(f"{sequence} has an entry below 3")
        result = cls(tuple(d for d in sequence if d >= 4))
        threes = sum(1 for d in sequence if d == 3)
        if threes != result.m:
            raise InvalidTuple(f"{sequence} has {threes} threes, a self-dual polyhedron needs {result.m}")
        return result

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return 4 + sum(t - 4 for t in self.entries)

    @property
    def order(self) -> int:
        return self.k + self.m

    @property
    def applications(self) -> int:
        """Z-transformations needed to grow the cube seed into P(T)."""
        return sum(t - 3 for t in self.entries)

    def target_sequence(self) -> DegreeSequence:
        return DegreeSequence.from_degrees(self.entries + (3,) * self.m)

    def is_constant(self) -> bool:
        return len(set(self.entries)) <= 1

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def high_degree_indices(T: DegreeTuple, first_grown: int = 3, first_b: int = 4, first_new: int = 5) -> list[int]:
    """Indices i of the vertices v_i of P(T) that reach degrees t_1, ..., t_k, in construction order.

    Defaults describe the cube seed (c = v_3, b = v_4, first inserted vertex v_5). Each entry t inserts t - 3
    vertices; the next vertex to grow is whatever sat in role b just before the last of those insertions.
    """
    grown = []
    c, b, next_new = first_grown, first_b, first_new
    for t in T.entries:
        grown.append(c)
        c = next_new + t - 5 if t >= 5 else b
        b = next_new + t - 4
        next_new += t - 3
    return grown
