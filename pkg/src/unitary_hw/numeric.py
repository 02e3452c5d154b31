"""Exact half-integer scalars and algebra-tagged coordinate sequences."""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import CoordinateCapError, NotIntegralError, ParseError

#: Inputs are bounded by ``|2 * coordinate| <= MAX_DOUBLED``.
MAX_DOUBLED = 10**6

_TOKEN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


@functools.total_ordering
class HalfInteger:
    """An element of (1/2)Z, stored as twice its value.

    >>> HalfInteger("5/2") + 1
    HalfInteger('7/2')
    >>> HalfInteger(3) - HalfInteger("1/2") == Fraction(5, 2)
    True
    """

    __slots__ = ("_doubled",)

    def __init__(self, value: Union[int, str, Fraction, HalfInteger] = 0):
        if isinstance(value, HalfInteger):
            doubled = value._doubled
        elif isinstance(value, bool):
            raise TypeError("bool is not a coordinate")
        elif isinstance(value, int):
            doubled = 2 * value
        elif isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            doubled = int(value * 2)
        elif isinstance(value, str):
            doubled = parse_half(value)._doubled
        else:
            raise TypeError(f"cannot make a HalfInteger from {type(value).__name__}")
        self._doubled = doubled

    @classmethod
    def from_doubled(cls, doubled: int) -> HalfInteger:
        obj = cls.__new__(cls)
        obj._doubled = int(doubled)
        return obj

    @property
    def doubled(self) -> int:
        return self._doubled

    @property
    def is_integer(self) -> bool:
        return self._doubled % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self._doubled, 2)

    def __int__(self) -> int:
        if self._doubled % 2:
            raise ValueError(f"{self} is not an integer")
        return self._doubled // 2

    @staticmethod
    def _coerce(other) -> int | None:
        if isinstance(other, HalfInteger):
            return other._doubled
        if isinstance(other, int) and not isinstance(other, bool):
            return 2 * other
        if isinstance(other, Fraction) and other.denominator in (1, 2):
            return int(other * 2)
        return None

    def __add__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInteger.from_doubled(self._doubled + d)

    __radd__ = __add__

    def __sub__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInteger.from_doubled(self._doubled - d)

    def __rsub__(self, other):
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return HalfInteger.from_doubled(d - self._doubled)

    def __neg__(self) -> HalfInteger:
        return HalfInteger.from_doubled(-self._doubled)

    def __abs__(self) -> HalfInteger:
        return HalfInteger.from_doubled(abs(self._doubled))

    def __eq__(self, other) -> bool:
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return self._doubled == d

    def __lt__(self, other) -> bool:
        d = self._coerce(other)
        if d is None:
            return NotImplemented
        return self._doubled < d

    def __hash__(self) -> int:
        return hash(Fraction(self._doubled, 2))

    def __str__(self) -> str:
        if self._doubled % 2 == 0:
            return str(self._doubled // 2)
        return f"{self._doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInteger({str(self)!r})"


def parse_half(token: str) -> HalfInteger:
    """Parse ``"7"``, ``"-3"`` or ``"k/2"`` with odd ``k``."""
    m = _TOKEN.match(token)
    if not m:
        raise ParseError(f"bad coordinate {token!r}: expected an integer or k/2")
    num, den = int(m.group(1)), m.group(2)
    if den is None:
        return HalfInteger.from_doubled(2 * num)
    if int(den) != 2 or num % 2 == 0:
        raise ParseError(f"bad coordinate {token!r}: only k/2 with odd k is allowed")
    return HalfInteger.from_doubled(num)


def parse_coords(text: str) -> tuple[HalfInteger, ...]:
    """Parse the comma-separated coordinate syntax, e.g. ``"9,4,3,3,2,1,1,0"``."""
    if not text.strip():
        raise ParseError("empty coordinate list")
    coords = tuple(parse_half(tok) for tok in text.split(","))
    for c in coords:
        if abs(c.doubled) > MAX_DOUBLED:
            raise CoordinateCapError(f"coordinate {c} exceeds the cap |2x| <= {MAX_DOUBLED}")
    return coords


def format_coords(coords: Iterable[HalfInteger]) -> str:
    return ",".join(str(c) for c in coords)


def halves(values: Iterable) -> tuple[HalfInteger, ...]:
    """Coerce ints, Fractions or strings to a tuple of HalfInteger."""
    return tuple(HalfInteger(v) for v in values)


@dataclass(frozen=True)
class SU:
    """su(p, q) with the standing assumption ``p <= q``."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("su(p, q) needs p, q >= 1")
        if self.p > self.q:
            raise ValueError(f"su({self.p},{self.q}): p <= q is assumed; swap the roles of p and q")

    @property
    def rank(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return f"su({self.p},{self.q})"


@dataclass(frozen=True)
class SOStar:
    """so*(2n)."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("so*(2n) needs n >= 2")

    @property
    def rank(self) -> int:
        return self.n

    def __str__(self) -> str:
        return f"so*({2 * self.n})"


Algebra = Union[SU, SOStar]


class Integrality(enum.Enum):
    INTEGER = "integer"
    HALF_ODD = "half-odd"


@dataclass(frozen=True)
class Parameter:
    """A coordinate sequence in standard coordinates, tagged with its algebra.

    Used both for parameters ``Lambda = lambda + rho`` and for highest weights.
    """

    algebra: Algebra
    coords: tuple[HalfInteger, ...]

    def __post_init__(self):
        coords = halves(self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.algebra.rank:
            raise ValueError(
                f"{self.algebra} has rank {self.algebra.rank}, got {len(coords)} coordinates"
            )
        for c in coords:
            if abs(c.doubled) > MAX_DOUBLED:
                raise CoordinateCapError(f"coordinate {c} exceeds the cap |2x| <= {MAX_DOUBLED}")
        parities = {c.doubled % 2 for c in coords}
        if len(parities) > 1:
            # for SU this is exactly "some difference is not an integer"
            raise NotIntegralError(
                f"{format_coords(coords)} mixes integer and half-odd coordinates"
            )

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.coords))})"


def rho(algebra: Algebra) -> Parameter:
    """Half sum of positive roots in standard coordinates."""
    n = algebra.rank
    if isinstance(algebra, SU):
        # (n-1)/2, (n-3)/2, ..., -(n-1)/2
        doubled = range(n - 1, -n, -2)
    else:
        doubled = range(2 * (n - 1), -1, -2)
    return Parameter(algebra, tuple(HalfInteger.from_doubled(d) for d in doubled))


def to_parameter(weight: Parameter) -> Parameter:
    """Highest weight ``lambda`` to parameter ``lambda + rho``."""
    r = rho(weight.algebra)
    return Parameter(weight.algebra, tuple(a + b for a, b in zip(weight.coords, r.coords)))


def from_parameter(param: Parameter) -> Parameter:
    """Parameter ``Lambda`` back to the highest weight ``Lambda - rho``."""
    r = rho(param.algebra)
    return Parameter(param.algebra, tuple(a - b for a, b in zip(param.coords, r.coords)))


def integrality_class(param: Parameter) -> Integrality:
    if all(c.is_integer for c in param.coords):
        return Integrality.INTEGER
    if not any(c.is_integer for c in param.coords):
        return Integrality.HALF_ODD
    # unreachable for a constructed Parameter, kept for raw tuples
    raise NotIntegralError(f"{param} mixes integer and half-odd coordinates")
