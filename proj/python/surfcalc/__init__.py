"""Exact-rational linear series toolkit for algebraic surfaces.

Divisor classes may be given as a sequence of integers, strings or
``fractions.Fraction`` values, or as a comma-separated string. Rational
results come back as ``Fraction``; structured reports come back as dicts
whose rational fields are "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import _core
from ._core import InputError, InvariantError, Surface

ClassLike = Union[str, Sequence[Union[int, str, Fraction]]]

__all__ = [
    "InputError",
    "InvariantError",
    "Surface",
    "load",
    "validate",
    "intersect",
    "euler_characteristic",
    "reider_freeness",
    "reider_very_ample",
    "seshadri",
    "zariski",
    "mumford_pullback",
    "mumford_intersect",
    "matsusaka",
    "cusp_bound",
    "discriminant",
    "pluricanonical_status",
    "k3_end_euler",
]


def _cls(value: ClassLike) -> str:
    if isinstance(value, str):
        return value
    return ",".join(str(v) for v in value)


def _q(text: str) -> Fraction:
    return Fraction(text)


def load(path: str) -> Surface:
    return Surface.load(str(path))


def validate(surface: Surface) -> dict:
    return json.loads(surface.validate())


def intersect(surface: Surface, a: ClassLike, b: ClassLike) -> Fraction:
    return _q(surface.intersect(_cls(a), _cls(b)))


def euler_characteristic(surface: Surface, d: ClassLike) -> Fraction:
    return _q(surface.euler_characteristic(_cls(d)))


def reider_freeness(surface: Surface, line_bundle: ClassLike, point: Optional[str] = None, bound: int = 3) -> dict:
    return json.loads(_core.reider(surface, _cls(line_bundle), point, bound, False))


def reider_very_ample(surface: Surface, line_bundle: ClassLike, point: Optional[str] = None, bound: int = 3) -> dict:
    return json.loads(_core.reider(surface, _cls(line_bundle), point, bound, True))


def seshadri(surface: Surface, line_bundle: ClassLike, point: str, bound: int = 3) -> dict:
    return json.loads(_core.seshadri(surface, _cls(line_bundle), point, bound))


def zariski(surface: Surface, divisor: ClassLike) -> tuple[list[Fraction], list[tuple[str, Fraction]]]:
    doc = json.loads(_core.zariski(surface, _cls(divisor)))
    positive = [_q(str(c)) for c in doc["positive_part"]]
    negative = [(n["curve"], _q(n["coefficient"])) for n in doc["negative_part"]]
    return positive, negative


def mumford_pullback(
    gram: Iterable[Iterable[int]], incidence: Mapping[str, Iterable[int]], divisor: str
) -> list[Fraction]:
    rows = [list(r) for r in gram]
    inc = {k: list(v) for k, v in incidence.items()}
    return [_q(v) for v in _core.mumford_pullback(rows, inc, divisor)]


def mumford_intersect(
    gram: Iterable[Iterable[int]],
    incidence: Mapping[str, Iterable[int]],
    first: str,
    second: str,
    base: Union[int, str, Fraction] = 0,
) -> Fraction:
    rows = [list(r) for r in gram]
    inc = {k: list(v) for k, v in incidence.items()}
    return _q(_core.mumford_intersect(rows, inc, first, second, str(base)))


def matsusaka(a: Union[int, str, Fraction], b: Union[int, str, Fraction]) -> dict:
    return json.loads(_core.matsusaka(str(a), str(b)))


def cusp_bound(degree: int) -> tuple[int, int]:
    return _core.cusp_bound(degree)


def discriminant(surface: Surface, c1: ClassLike, c2: int) -> Fraction:
    return _q(_core.discriminant(surface, _cls(c1), c2))


def pluricanonical_status(k_squared: int, m: int) -> tuple[str, str]:
    return _core.pluricanonical_status(k_squared, m)


def k3_end_euler(r: int, d: int, g: int) -> int:
    return _core.k3_end_euler(r, d, g)
