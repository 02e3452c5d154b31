"""Unitarity of su(p, q) conjugates.

The oracle is the string inequality ``L_{p'} - L_{n-q'+1} <= 1`` on a single bar
split.  The structural classifiers rebuild the unitary set of a dominant
parameter directly: a closed form in the regular case, and block-decomposition
candidates in the singular case.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotIntegralError, WrongCaseError
from .numeric import HalfInteger, SU, rho
from .weyl import BarSplit, DominantParameter, as_dominant, enumerate_su

Coords = tuple[HalfInteger, ...]


@dataclass(frozen=True)
class StringProfile:
    p_prime: int
    q_prime: int


@dataclass(frozen=True)
class Tilde:
    """The parameter with the top q coordinates on the right of the bar."""

    def __str__(self) -> str:
        return "tilde"


@dataclass(frozen=True)
class RegularString:
    s: int
    r: int
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"string(s={self.s}, r={self.r}, a={self.a}, b={self.b}, c={self.c})"


SINGULAR_FORM_NAMES = {
    1: "overlap",
    2: "overlap-first-block",
    3: "overlap-last-block",
    4: "overlap-single-block",
    5: "head-from-c1",
    6: "split-b-block",
    7: "tail-from-c2",
}


@dataclass(frozen=True)
class SingularForm:
    """One of the seven candidate shapes for a singular dominant parameter.

    ``pivot`` is the block index shared by both strings (or the last block in
    the p'-string), ``c1_cut``/``c2_cut``/``b_cut`` the number of leading
    entries of C1, C2 and B_pivot put in the upper piece.  Shapes 5 and 7 cut
    C1 (resp. C2) into three pieces; ``outer_cut`` is the second cut point.
    """

    index: int
    pivot: Optional[int] = None
    c1_cut: Optional[int] = None
    c2_cut: Optional[int] = None
    b_cut: Optional[int] = None
    outer_cut: Optional[int] = None

    @property
    def name(self) -> str:
        return SINGULAR_FORM_NAMES[self.index]

    def __str__(self) -> str:
        extra = [
            f"{k}={v}"
            for k, v in (
                ("pivot", self.pivot),
                ("c1", self.c1_cut),
                ("c2", self.c2_cut),
                ("b", self.b_cut),
                ("outer", self.outer_cut),
            )
            if v is not None
        ]
        return f"{self.index}:{self.name}" + (f"({', '.join(extra)})" if extra else "")


FormTag = Union[Tilde, RegularString, SingularForm]


@dataclass(frozen=True)
class SuUnitaryItem:
    split: BarSplit
    profile: StringProfile
    form: FormTag


@dataclass(frozen=True)
class BlockDecomposition:
    """``D1; C1 A1' B1 ... B_{r-1} Ar' C2; D2`` with every A_i stored without repetition."""

    D1: Coords
    C1: Coords
    A_blocks: tuple[Coords, ...]
    B_blocks: tuple[Coords, ...]
    C2: Coords
    D2: Coords

    @property
    def r(self) -> int:
        return len(self.A_blocks)

    @property
    def repeated(self) -> Coords:
        return tuple(v for block in self.A_blocks for v in block)


@dataclass(frozen=True)
class NoUnitaryConjugates:
    reason: str


@dataclass(frozen=True)
class TildeRho:
    pass


@dataclass(frozen=True)
class EdgePoint:
    """``w rho`` whose Young diagram has j rows of i boxes."""

    i: int
    j: int


@dataclass(frozen=True)
class NotUnitaryPoint:
    pass


@dataclass(frozen=True)
class ConeReport:
    w_rho: BarSplit
    classification: Union[TildeRho, EdgePoint, NotUnitaryPoint]
    mu_equalities_hold: bool
    # n-1 for the full cone, -1 when the chamber has no unitary points
    cone_dimension: int

    @property
    def unitary(self) -> bool:
        return not isinstance(self.classification, NotUnitaryPoint) and self.mu_equalities_hold


def string_profile(split: BarSplit) -> StringProfile:
    left, right = split.left, split.right
    pp = 1
    while pp < len(left) and left[pp] == left[pp - 1] - 1:
        pp += 1
    qq = 1
    while qq < len(right) and right[-qq - 1] == right[-qq] + 1:
        qq += 1
    return StringProfile(pp, qq)


def is_unitary_su(split: BarSplit) -> bool:
    """The unitarity inequality for an integral k-dominant regular split."""
    if len({c.doubled % 2 for c in split.coords}) > 1:
        raise NotIntegralError(f"{split} has non-integral differences")
    prof = string_profile(split)
    return split.left[prof.p_prime - 1] - split.right[len(split.right) - prof.q_prime] <= 1


def _item(split: BarSplit, form: FormTag) -> SuUnitaryItem:
    return SuUnitaryItem(split, string_profile(split), form)


def _sorted_items(items) -> list[SuUnitaryItem]:
    return sorted(items, key=lambda it: it.split.left, reverse=True)


def classify_regular_su(dom, notes: Optional[list] = None) -> list[SuUnitaryItem]:
    """Unitary conjugates of a regular integral dominant parameter, in closed form."""
    dom = as_dominant(dom)
    alg = dom.algebra
    L = dom.coords
    n, p, q = alg.rank, alg.p, alg.q
    if len(set(L)) < n:
        raise WrongCaseError(f"{dom} has repeated coordinates")

    found = [(BarSplit(L[q:], L[:q]), Tilde())]
    if L[q - 1] == L[q] + 1:
        lo = q - 1
        while lo > 0 and L[lo - 1] == L[lo] + 1:
            lo -= 1
        hi = q
        while hi < n - 1 and L[hi + 1] == L[hi] - 1:
            hi += 1
        s, r = lo + 1, hi - lo
        for a in range(q - s + 1):
            for b in range(a, a + s + r - q):
                c = b - a - s + q + 1
                # 1-based: left = s+a..s+b, s+c+1..n ; right = 1..s+a-1, s+b+1..s+c
                left = L[s + a - 1 : s + b] + L[s + c :]
                right = L[: s + a - 1] + L[s + b : s + c]
                found.append((BarSplit(left, right), RegularString(s, r, a, b, c)))

    items = []
    for split, form in found:
        if is_unitary_su(split):
            items.append(_item(split, form))
        elif notes is not None:
            notes.append(f"divergence: closed-form conjugate {split} [{form}] fails the unitarity inequality")
    return _sorted_items(items)


def _runs(values, pred):
    """Maximal runs of consecutive entries of ``values`` on which ``pred`` agrees."""
    out = []
    for v in values:
        if out and pred(out[-1][-1]) == pred(v):
            out[-1].append(v)
        else:
            out.append([v])
    return out


def decompose_singular(dom) -> Union[BlockDecomposition, NoUnitaryConjugates]:
    dom = as_dominant(dom)
    counts = Counter(dom.coords)
    if all(m == 1 for m in counts.values()):
        raise WrongCaseError(f"{dom} is regular")
    if any(m > 2 for m in counts.values()):
        return NoUnitaryConjugates("a coordinate is repeated more than twice")
    distinct = sorted(counts, reverse=True)
    rep_idx = [i for i, v in enumerate(distinct) if counts[v] == 2]
    top, bottom = rep_idx[0], rep_idx[-1]
    middle = distinct[top : bottom + 1]
    if any(middle[k] != middle[k + 1] + 1 for k in range(len(middle) - 1)):
        return NoUnitaryConjugates("the coordinates between the repeated ones do not form a string")
    start = top
    while start > 0 and distinct[start - 1] == distinct[start] + 1:
        start -= 1
    end = bottom
    while end < len(distinct) - 1 and distinct[end + 1] == distinct[end] - 1:
        end += 1
    runs = _runs(middle, lambda v: counts[v] == 2)
    decomp = BlockDecomposition(
        D1=tuple(distinct[:start]),
        C1=tuple(distinct[start:top]),
        A_blocks=tuple(tuple(run) for run in runs[0::2]),
        B_blocks=tuple(tuple(run) for run in runs[1::2]),
        C2=tuple(distinct[bottom + 1 : end + 1]),
        D2=tuple(distinct[end + 1 :]),
    )
    if len(decomp.repeated) > dom.algebra.p:
        return NoUnitaryConjugates(
            f"{len(decomp.repeated)} repeated coordinates do not fit on the {dom.algebra.p} left slots"
        )
    return decomp


def _candidate_left_singles(d: BlockDecomposition):
    """Yield ``(left singles, form)`` for every candidate shape with its side conditions."""
    C1, C2, B, r = d.C1, d.C2, d.B_blocks, d.r

    def flat(blocks):
        return tuple(v for b in blocks for v in b)

    for k in range(len(C1) + 1):
        C11, C12 = C1[:k], C1[k:]
        for m in range(len(C2) + 1):
            C21, C22 = C2[:m], C2[m:]
            for i in range(1, r + 1):
                # A_i shared by both strings
                if i == r and C2 and not C21:
                    continue
                if i == 1 and C1 and not C12:
                    continue
                yield C12 + flat(B[: i - 1]) + C22 + d.D2, SingularForm(1, i, k, m)
            if k == 0 and not (r == 1 and C2 and not C21):
                # p'-string is A1 alone, q'-string starts with all of C1
                yield C22 + d.D2, SingularForm(2, 1, 0, m)
            if m == 0 and not (r == 1 and C1 and not C12):
                # q'-string is A_r alone
                yield C12 + flat(B) + C2 + d.D2, SingularForm(3, r, k, 0)
            if r == 1 and k == 0 and m == 0:
                yield C2 + d.D2, SingularForm(4, 1, 0, 0)
            for j in range(k):
                # p'-string C1[j:k] cut out of C1; C1[:j] joins D1 on the right
                if k < len(C1):
                    yield C1[j:k] + C22 + d.D2, SingularForm(5, None, k, m, outer_cut=j)
            for i in range(1, r):
                Bi = B[i - 1]
                for t in range(1, len(Bi)):
                    yield (
                        C12 + flat(B[: i - 1]) + Bi[:t] + C22 + d.D2,
                        SingularForm(6, i, k, m, t),
                    )
            for t in range(m + 1, len(C2) + 1):
                # q'-string C2[m:t] cut out of C2; C2[t:] joins D2 on the left
                if m > 0:
                    yield C12 + flat(B) + C21 + C2[t:] + d.D2, SingularForm(7, r, k, m, outer_cut=t)


def singular_candidates(dom) -> list[tuple[BarSplit, SingularForm]]:
    """All candidates of the seven shapes that have exactly p coordinates left of the bar."""
    dom = as_dominant(dom)
    d = decompose_singular(dom)
    if isinstance(d, NoUnitaryConjugates):
        return []
    p = dom.algebra.p
    everything = set(dom.coords)
    repeated = d.repeated
    seen = set()
    out = []
    for left_singles, form in _candidate_left_singles(d):
        if len(repeated) + len(left_singles) != p:
            continue
        left_set = set(left_singles)
        left = tuple(sorted(repeated + left_singles, reverse=True))
        right = tuple(sorted(repeated + tuple(v for v in everything if v not in left_set and v not in repeated), reverse=True))
        split = BarSplit(left, right)
        if split in seen:
            continue
        seen.add(split)
        out.append((split, form))
    return out


def classify_singular_su(dom, notes: Optional[list] = None) -> list[SuUnitaryItem]:
    """Unitary conjugates of a singular dominant parameter.

    Candidates are generated from the block decomposition and then filtered by
    the unitarity inequality; rejected candidates are reported in ``notes``.
    """
    dom = as_dominant(dom)
    d = decompose_singular(dom)
    if isinstance(d, NoUnitaryConjugates):
        if notes is not None:
            notes.append(f"no unitary conjugates: {d.reason}")
        return []
    items = []
    for split, form in singular_candidates(dom):
        if is_unitary_su(split):
            items.append(_item(split, form))
        elif notes is not None:
            notes.append(f"candidate {split} [{form}] has p left coordinates but is not unitary")
    return _sorted_items(items)


def classify_su(dom, notes: Optional[list] = None) -> list[SuUnitaryItem]:
    dom = as_dominant(dom)
    if len(set(dom.coords)) == len(dom.coords):
        return classify_regular_su(dom, notes)
    return classify_singular_su(dom, notes)


def oracle_su(dom) -> list[tuple[BarSplit, bool]]:
    return [(s, is_unitary_su(s)) for s in enumerate_su(dom)]


def translation_cone_check(split: BarSplit) -> ConeReport:
    """Locate ``w rho`` for ``split = w(rho + mu)`` in the Hasse diagram of rho."""
    coords = split.coords
    n, p, q = len(coords), len(split.left), len(split.right)
    if len(set(coords)) < n:
        raise WrongCaseError(f"{split} is singular")
    alg = SU(p, q)
    dom = sorted(coords, reverse=True)
    rank = {v: m for m, v in enumerate(dom)}
    r = rho(alg).coords
    mu = [dom[m] - r[m] for m in range(n)]
    w_rho = tuple(r[rank[v]] for v in coords)
    w_mu = [mu[rank[v]] for v in coords]
    tilde_left = r[q:]
    rows = [int(w_rho[k] - tilde_left[k]) for k in range(p)]
    nonzero = [x for x in rows if x]
    w_rho_split = BarSplit(w_rho[:p], w_rho[p:])
    if not nonzero:
        return ConeReport(w_rho_split, TildeRho(), True, n - 1)
    j, i = len(nonzero), nonzero[0]
    if any(x != i for x in nonzero):
        return ConeReport(w_rho_split, NotUnitaryPoint(), False, -1)
    tied = w_mu[:j] + w_mu[n - i :]
    return ConeReport(w_rho_split, EdgePoint(i, j), len(set(tied)) == 1, p + q - i - j)
