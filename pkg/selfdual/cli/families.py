"""Family selectors shared by the `construct`, `verify` and `fingerprint` commands."""

from dataclasses import dataclass
from enum import StrEnum

from selfdual.constructions import (
    DegreeTuple,
    construct_G,
    construct_P_prime,
    construct_Q,
    construct_S,
    run_algorithm_one,
)
from selfdual.errors import InvalidParameter
from selfdual.planar_map.dart_map import PlanarMap
from selfdual.planar_map.radial import LabeledRadial


class Family(StrEnum):
    P_OF_T = "p-of-t"
    S = "s"
    Q = "q"
    GP = "gp"
    PPRIME = "pprime"


@dataclass(frozen=True)
class Built:
    name: str
    map: PlanarMap
    degree_tuple: DegreeTuple | None = None
    radial: LabeledRadial | None = None


def _need(family: Family, **params: int | str | None) -> None:
    missing = [f"--{name.replace('_', '-')}" for name, value in params.items() if value is None]
    if missing:
        raise InvalidParameter(f"family {family.value} needs {', '.join(missing)}")


def build_family(
    family: Family | str,
    tuple_text: str | None = None,
    x: int | None = None,
    y: int | None = None,
    p: int | None = None,
    n: int | None = None,
    k: int | None = None,
) -> Built:
    family = Family(family)
    if family is Family.P_OF_T:
        _need(family, tuple=tuple_text)
        assert tuple_text is not None
        T = DegreeTuple.parse(tuple_text)
        run = run_algorithm_one(T)
        return Built(f"P{T}", run.polytope, T, run.radial)
    if family in (Family.S, Family.Q):
        _need(family, x=x, y=y)
        assert x is not None and y is not None
        build = construct_S if family is Family.S else construct_Q
        return Built(f"{family.value.upper()}({x},{y})", build(x, y))
    if family is Family.GP:
        _need(family, p=p)
        assert p is not None
        return Built(f"G_{p}", construct_G(p))
    _need(family, n=n, k=k)
    assert n is not None and k is not None
    return Built(f"P'({n};{k})", construct_P_prime(n, k))
