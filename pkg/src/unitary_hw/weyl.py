"""k-dominant regular conjugates of a dominant parameter.

For su(p, q) a conjugate is a bar split ``(left | right)`` of the coordinate
multiset with both sides strictly decreasing.  For so*(2n) it is a strictly
decreasing signed arrangement of the absolute values, reachable from the
dominant representative by an even number of sign changes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .numeric import HalfInteger, Parameter, SOStar, SU


@dataclass(frozen=True)
class DominantParameter(Parameter):
    """A g-dominant parameter.

    SU: weakly decreasing.  SOStar: ``L1 >= ... >= L_{n-1} >= |L_n|``.
    """

    def __post_init__(self):
        super().__post_init__()
        c = self.coords
        if isinstance(self.algebra, SU):
            ok = all(c[i] >= c[i + 1] for i in range(len(c) - 1))
        else:
            ok = all(c[i] >= c[i + 1] for i in range(len(c) - 2)) and c[-2] >= abs(c[-1])
        if not ok:
            raise ValueError(f"{self} is not dominant for {self.algebra}")


@dataclass(frozen=True)
class BarSplit:
    """``(left | right)``: the first p and the last q coordinates of an SU parameter."""

    left: tuple[HalfInteger, ...]
    right: tuple[HalfInteger, ...]

    @property
    def coords(self) -> tuple[HalfInteger, ...]:
        return self.left + self.right

    @property
    def algebra(self) -> SU:
        return SU(len(self.left), len(self.right))

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.left))} | {', '.join(map(str, self.right))})"


@dataclass(frozen=True)
class SignedArrangement:
    """A strictly decreasing so* conjugate and its sign-change count from the dominant form."""

    coords: tuple[HalfInteger, ...]
    flips: int

    @property
    def has_zero(self) -> bool:
        return any(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.coords))})"


def as_dominant(param: Parameter) -> DominantParameter:
    if isinstance(param, DominantParameter):
        return param
    return DominantParameter(param.algebra, param.coords)


def dominant_representative(param: Parameter) -> DominantParameter:
    """The g-dominant element of the Weyl orbit of ``param``."""
    coords = param.coords
    if isinstance(param.algebra, SU):
        return DominantParameter(param.algebra, tuple(sorted(coords, reverse=True)))
    absvals = sorted((abs(c) for c in coords), reverse=True)
    negatives = sum(1 for c in coords if c < 0)
    # D_n changes signs in pairs; a zero coordinate soaks up the odd one
    if negatives % 2 == 1 and absvals[-1] != 0:
        absvals[-1] = -absvals[-1]
    return DominantParameter(param.algebra, tuple(absvals))


def is_k_dominant_regular(coords, algebra) -> bool:
    if isinstance(coords, BarSplit):
        coords = coords.coords
    elif isinstance(coords, (Parameter, SignedArrangement)):
        coords = coords.coords
    if isinstance(algebra, SU):
        blocks = (coords[: algebra.p], coords[algebra.p :])
    else:
        blocks = (coords,)
    return all(b[i] > b[i + 1] for b in blocks for i in range(len(b) - 1))


def enumerate_su(dom: Parameter) -> list[BarSplit]:
    """All bar splits of ``dom``, ordered by left block, largest first."""
    dom = as_dominant(dom)
    alg = dom.algebra
    if not isinstance(alg, SU):
        raise TypeError("enumerate_su needs an su(p, q) parameter")
    counts = Counter(dom.coords)
    if any(m > 2 for m in counts.values()):
        return []
    doubled = [v for v, m in counts.items() if m == 2]
    singles = sorted((v for v, m in counts.items() if m == 1), reverse=True)
    free = alg.p - len(doubled)
    if free < 0:
        return []
    splits = []
    for chosen in itertools.combinations(range(len(singles)), free):
        picked = set(chosen)
        left = doubled + [singles[i] for i in picked]
        right = doubled + [singles[i] for i in range(len(singles)) if i not in picked]
        splits.append(
            BarSplit(tuple(sorted(left, reverse=True)), tuple(sorted(right, reverse=True)))
        )
    splits.sort(key=lambda s: s.left, reverse=True)
    return splits


def sign_change_count(dom: Parameter, arrangement) -> int:
    """Number of nonzero absolute values whose sign differs between ``dom`` and ``arrangement``.

    A doubled value is paired up so that it contributes ``|#neg(arr) - #neg(dom)|``.
    """
    coords = arrangement.coords if hasattr(arrangement, "coords") else tuple(arrangement)
    if Counter(abs(c) for c in dom.coords) != Counter(abs(c) for c in coords):
        raise ValueError(f"{arrangement} and {dom} have different absolute values")
    neg_dom = Counter(abs(c) for c in dom.coords if c < 0)
    neg_arr = Counter(abs(c) for c in coords if c < 0)
    return sum(abs(neg_arr[v] - neg_dom[v]) for v in set(neg_dom) | set(neg_arr))


def arrangement_from_positives(absvals, positives) -> tuple[HalfInteger, ...] | None:
    """Signed arrangement in which exactly ``positives`` among the single values are positive.

    Doubled values receive both signs.  Returns None if no strictly decreasing
    arrangement exists (a value of multiplicity 3, or zero twice).
    """
    counts = Counter(absvals)
    out = []
    for v, m in counts.items():
        if m > 2 or (v == 0 and m > 1):
            return None
        if v == 0:
            out.append(v)
        elif m == 2:
            out += [v, -v]
        else:
            out.append(v if v in positives else -v)
    return tuple(sorted(out, reverse=True))


def enumerate_so(dom: Parameter) -> list[SignedArrangement]:
    """All k-dominant regular conjugates of an so* parameter, lexicographically largest first."""
    dom = as_dominant(dom)
    if not isinstance(dom.algebra, SOStar):
        raise TypeError("enumerate_so needs an so*(2n) parameter")
    absvals = [abs(c) for c in dom.coords]
    counts = Counter(absvals)
    if any(m > 2 for m in counts.values()) or counts[HalfInteger(0)] > 1:
        return []
    singles = [v for v, m in counts.items() if m == 1 and v != 0]
    has_zero = HalfInteger(0) in counts
    out = []
    for mask in range(1 << len(singles)):
        positives = {v for i, v in enumerate(singles) if mask >> i & 1}
        coords = arrangement_from_positives(absvals, positives)
        flips = sign_change_count(dom, coords)
        if flips % 2 == 0 or has_zero:
            out.append(SignedArrangement(coords, flips))
    out.sort(key=lambda a: a.coords, reverse=True)
    return out
