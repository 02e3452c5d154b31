"""Unitarity of so*(2n) conjugates.

A conjugate is a strictly decreasing signed arrangement of the absolute values
of the dominant parameter.  Doubled values always carry both signs, so a
candidate is pinned down by the set of single absolute values that are taken
positive.  The structural classifiers below produce those sets clause by clause
and then re-check every candidate against the q-case / p-case inequalities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Union

from .errors import WrongCaseError
from .numeric import HalfInteger, Integrality, SOStar, integrality_class, rho
from .weyl import (
    DominantParameter,
    SignedArrangement,
    arrangement_from_positives,
    as_dominant,
    enumerate_so,
    sign_change_count,
)

ZERO = HalfInteger(0)
HALF = HalfInteger.from_doubled(1)


@dataclass(frozen=True)
class PCase:
    p: int

    def __str__(self) -> str:
        return f"p-case(p={self.p})"


@dataclass(frozen=True)
class QCase:
    q: int

    def __str__(self) -> str:
        return f"q-case(q={self.q})"


CaseProfile = Union[PCase, QCase]


@dataclass(frozen=True)
class ZeroStructure:
    """``x``, ``u`` and the offsets ``v >= 2`` with ``x + v`` repeated, ``v <= u``.

    ``repeated_beyond`` records whether some value above ``x + u`` is repeated.
    """

    x: HalfInteger
    u: int
    repeated_above: tuple[int, ...]
    repeated_beyond: bool = False


@dataclass(frozen=True)
class SoUnitaryItem:
    arrangement: SignedArrangement
    profile: CaseProfile
    tag: str
    # "even" when the sign changes are even, "zero-absorbed" when a 0 coordinate is present
    parity_used: str
    a: Optional[int] = None


def case_profile(arr) -> CaseProfile:
    c = arr.coords if hasattr(arr, "coords") else tuple(arr)
    if len(c) < 2:
        raise ValueError("so*(2n) needs n >= 2")
    if c[0] == c[1] + 1:
        p = 2
        while p < len(c) and c[p] == c[p - 1] - 1:
            p += 1
        return PCase(p)
    q = 2
    while q < len(c) and c[q] == c[q - 1] - 1:
        q += 1
    return QCase(q)


def is_unitary_so(arr) -> bool:
    c = arr.coords if hasattr(arr, "coords") else tuple(arr)
    prof = case_profile(c)
    if isinstance(prof, QCase):
        return c[0] + c[1] <= prof.q - 1
    if c[0].is_integer:
        return c[0] <= prof.p - 1
    return c[0].doubled <= prof.p


def oracle_so(dom) -> list[tuple[SignedArrangement, bool]]:
    return [(a, is_unitary_so(a)) for a in enumerate_so(dom)]


def _abs_counts(dom: DominantParameter) -> Counter:
    return Counter(abs(c) for c in dom.coords)


def zero_structure(dom) -> Optional[ZeroStructure]:
    """The (x, u, v) data when 0 (integer) or a pair of absolute value 1/2 (half-odd) is present."""
    dom = as_dominant(dom)
    counts = _abs_counts(dom)
    if integrality_class(dom) is Integrality.INTEGER:
        if counts[ZERO] == 0:
            return None
        x = ZERO
    else:
        if counts[HALF] < 2:
            return None
        x = HALF
    while counts[x + 1] == 2:
        x = x + 1
    u = 0
    while counts[x + u + 1] > 0:
        u += 1
    reps = tuple(v for v in range(2, u + 1) if counts[x + v] == 2)
    beyond = any(m >= 2 and v > x + u for v, m in counts.items())
    return ZeroStructure(x, u, reps, beyond)


def _singles(counts: Counter) -> list[HalfInteger]:
    return sorted((v for v, m in counts.items() if m == 1 and v != 0), reverse=True)


def _span(x: HalfInteger, lo: int, hi: int) -> set:
    return {x + k for k in range(lo, hi + 1)}


def _admit(dom, candidates, notes, require_even: bool) -> list[SoUnitaryItem]:
    counts = _abs_counts(dom)
    if any(m > 2 for m in counts.values()) or counts[ZERO] > 1:
        return []
    singles = set(_singles(counts))
    absvals = [abs(c) for c in dom.coords]
    has_zero = counts[ZERO] == 1
    seen = set()
    items = []
    for positives, tag, a in candidates:
        coords = arrangement_from_positives(absvals, set(positives) & singles)
        if coords is None or coords in seen:
            continue
        seen.add(coords)
        flips = sign_change_count(dom, coords)
        arr = SignedArrangement(coords, flips)
        label = f"{arr} [{tag}]"
        if flips % 2 and not has_zero:
            if notes is not None:
                notes.append(f"candidate {label} rejected: parity = odd ({flips} sign changes)")
            continue
        if not require_even and not has_zero and notes is not None:
            notes.append(f"divergence: candidate {label} has no zero coordinate to absorb parity")
        if not is_unitary_so(arr):
            if notes is not None:
                notes.append(f"divergence: candidate {label} fails the unitarity inequality")
            continue
        parity = "zero-absorbed" if has_zero else "even"
        items.append(SoUnitaryItem(arr, case_profile(arr), tag, parity, a))
    items.sort(key=lambda it: it.arrangement.coords, reverse=True)
    return items


def _tail_string(counts: Counter) -> list[HalfInteger]:
    """Longest string at the end of the distinct absolute values."""
    distinct = sorted(counts, reverse=True)
    k = len(distinct) - 1
    while k > 0 and distinct[k - 1] == distinct[k] + 1:
        k -= 1
    return distinct[k:]


def _zero_free_candidates(dom: DominantParameter, notes):
    """Shared by integer parameters without 0 and half-odd ones without the 1/2 pair."""
    counts = _abs_counts(dom)
    n = len(dom.coords)
    last = dom.coords[-1]
    repeated = [v for v, m in counts.items() if m == 2]
    tail = _tail_string(counts)
    odd_pos = (last > 0 and n % 2 == 1) or (last < 0 and n % 2 == 0)
    if len(repeated) >= 2:
        if notes is not None:
            notes.append("no unitary conjugates: at least two absolute values are repeated")
        return []
    if len(repeated) == 1:
        if repeated[0] in tail and odd_pos:
            return [(set(), "nonzero.repeated-head", None)]
        if notes is not None:
            notes.append("no unitary conjugates: the repeated value fails the tail-string or sign condition")
        return []
    if not odd_pos:
        return [(set(), "nonzero.all-negative", None)]
    return [({s}, "nonzero.tail-string-head", None) for s in tail]


def classify_integer_so(dom, notes: Optional[list] = None) -> list[SoUnitaryItem]:
    dom = as_dominant(dom)
    if not isinstance(dom.algebra, SOStar):
        raise TypeError("classify_integer_so needs an so*(2n) parameter")
    if integrality_class(dom) is not Integrality.INTEGER:
        raise WrongCaseError(f"{dom} has half-odd coordinates")
    z = zero_structure(dom)
    if z is None:
        return _admit(dom, _zero_free_candidates(dom, notes), notes, require_even=True)

    counts = _abs_counts(dom)
    x, u, reps = z.x, z.u, z.repeated_above
    cands = []
    if z.repeated_beyond:
        if notes is not None:
            notes.append("no unitary conjugates: a value above x+u is repeated")
    elif len(reps) >= 2:
        for a in range(reps[-1], u + 1):
            cands.append((_span(x, 1, a), "zero.p-string-over-repeats", a))
    elif len(reps) == 1:
        cands.append((set(), "zero.q-case-repeated-head", None))
        for a in range(reps[0], u + 1):
            cands.append((_span(x, 1, a), "zero.p-string-over-repeat", a))
    else:
        for a in range(1, u):
            cands.append(({x + a + 1}, "zero.q-case-head", a))
        sorted_dom = dom.coords
        if x == 0 and len(sorted_dom) >= 2 and sorted_dom[-2] > 1:
            cands.append((set(), "zero.q-case-zero-head", None))
        for a in range(1, u + 1):
            cands.append((_span(x, 1, a), "zero.p-string", a))
        cands.append((set(), "zero.p-string-from-x", None))
    if any(m > 2 for m in counts.values()) or counts[ZERO] > 1:
        return []
    return _admit(dom, cands, notes, require_even=False)


def classify_halfint_so(dom, notes: Optional[list] = None) -> list[SoUnitaryItem]:
    dom = as_dominant(dom)
    if not isinstance(dom.algebra, SOStar):
        raise TypeError("classify_halfint_so needs an so*(2n) parameter")
    if integrality_class(dom) is not Integrality.HALF_ODD:
        raise WrongCaseError(f"{dom} has integer coordinates")
    z = zero_structure(dom)
    if z is None:
        return _admit(dom, _zero_free_candidates(dom, notes), notes, require_even=True)

    x, u, reps = z.x, z.u, z.repeated_above
    cands = []
    if z.repeated_beyond:
        if notes is not None:
            notes.append("no unitary conjugates: a value above x+u is repeated")
    elif len(reps) >= 2:
        if notes is not None:
            notes.append("no unitary conjugates: two values between x+2 and x+u are repeated")
    elif len(reps) == 1:
        cands.append((set(), "halfpair.q-case-repeated-head", None))
    else:
        for a in range(1, u):
            cands.append(({x + a + 1}, "halfpair.q-case-head", a))
        if u >= 1:
            cands.append(({x + 1}, "halfpair.p-string-plus-one", None))
        cands.append((set(), "halfpair.p-string-from-x", None))
    return _admit(dom, cands, notes, require_even=True)


def classify_so(dom, notes: Optional[list] = None) -> list[SoUnitaryItem]:
    dom = as_dominant(dom)
    if integrality_class(dom) is Integrality.INTEGER:
        return classify_integer_so(dom, notes)
    return classify_halfint_so(dom, notes)


def unitary_hasse_points_so(n: int) -> list[SoUnitaryItem]:
    """q-edge, p-edge and rho-tilde points among the conjugates of rho."""
    alg = SOStar(n)
    dom = as_dominant(rho(alg))
    H = HalfInteger
    found = []
    for q in range(3, n + 1):
        coords = (H(q - 1),) + tuple(H(-k) for k in range(0, q - 1)) + tuple(H(-k) for k in range(q, n))
        found.append((coords, f"q-edge(q={q})"))
    for p in range(2, n + 1):
        coords = tuple(H(p - 1 - k) for k in range(p)) + tuple(H(-k) for k in range(p, n))
        found.append((coords, f"p-edge(p={p})"))
    found.append((tuple(H(-k) for k in range(n)), "tilde"))
    items = []
    seen = set()
    for coords, tag in found:
        if coords in seen:
            continue
        seen.add(coords)
        arr = SignedArrangement(coords, sign_change_count(dom, coords))
        items.append(SoUnitaryItem(arr, case_profile(arr), tag, "zero-absorbed"))
    items.sort(key=lambda it: it.arrangement.coords, reverse=True)
    return items
