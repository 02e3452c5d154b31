"""Classification results, theorem-vs-oracle scans and their JSON form.

Coordinates are always serialized as strings ("7", "-3/2") so no float ever
appears in a payload.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .errors import LimitExceededError
from .hasse import Edge, HasseDiagram, HasseNode, Mark, PEdge, QEdge, YoungDiagram
from .numeric import (
    Algebra,
    HalfInteger,
    Integrality,
    Parameter,
    SOStar,
    SU,
    integrality_class,
    parse_half,
)
from .so import PCase, QCase, SoUnitaryItem, case_profile, classify_so, is_unitary_so
from .su import (
    RegularString,
    SingularForm,
    StringProfile,
    SuUnitaryItem,
    Tilde,
    TildeRho,
    classify_su,
    is_unitary_su,
    string_profile,
)
from .weyl import (
    BarSplit,
    DominantParameter,
    SignedArrangement,
    dominant_representative,
    enumerate_so,
    enumerate_su,
)

DEFAULT_LIMIT = 10**6

Item = Union[SuUnitaryItem, SoUnitaryItem]


@dataclass(frozen=True)
class OracleRow:
    arrangement: Union[BarSplit, SignedArrangement]
    unitary: bool
    profile: Union[StringProfile, PCase, QCase]


@dataclass(frozen=True)
class ClassificationResult:
    input: DominantParameter
    normalized: bool
    integrality: Integrality
    conjugate_count: int
    items: tuple[Item, ...]
    oracle_agrees: bool
    diagnostics: tuple[str, ...] = ()
    theorem_run: bool = True

    @property
    def algebra(self) -> Algebra:
        return self.input.algebra


def estimate_conjugates(dom: Parameter) -> int:
    """Size of the k-dominant regular conjugate set, without enumerating it."""
    coords = dom.coords
    if isinstance(dom.algebra, SU):
        counts = Counter(coords)
        if any(m > 2 for m in counts.values()):
            return 0
        d = sum(1 for m in counts.values() if m == 2)
        if d > dom.algebra.p:
            return 0
        return math.comb(len(coords) - 2 * d, dom.algebra.p - d)
    counts = Counter(abs(c) for c in coords)
    if any(m > 2 for m in counts.values()) or counts[HalfInteger(0)] > 1:
        return 0
    singles = sum(1 for v, m in counts.items() if m == 1 and v != 0)
    return 2**singles


def _profile(arr):
    # oracle-only items (--no-theorem) carry a profile but no structural form
    return string_profile(arr) if isinstance(arr, BarSplit) else case_profile(arr)


def oracle_table(param: Parameter, limit: int = DEFAULT_LIMIT) -> list[OracleRow]:
    dom = dominant_representative(param)
    est = estimate_conjugates(dom)
    if est > limit:
        raise LimitExceededError(f"{est} conjugates exceed the limit {limit}")
    if isinstance(dom.algebra, SU):
        return [OracleRow(s, is_unitary_su(s), _profile(s)) for s in enumerate_su(dom)]
    return [OracleRow(a, is_unitary_so(a), _profile(a)) for a in enumerate_so(dom)]


def _key(arr) -> tuple:
    return arr.coords if isinstance(arr, SignedArrangement) else (arr.left, arr.right)


def classify(param: Parameter, limit: int = DEFAULT_LIMIT, theorem: bool = True) -> ClassificationResult:
    """Normalize to the dominant representative, run the structural classifier and the oracle."""
    dom = dominant_representative(param)
    normalized = tuple(dom.coords) != tuple(param.coords)
    rows = oracle_table(dom, limit)
    oracle_set = {_key(r.arrangement) for r in rows if r.unitary}
    notes: list[str] = []
    if normalized:
        notes.append(f"input normalized to the dominant representative {dom}")
    if not rows:
        notes.append("no k-dominant regular conjugates (a value repeats too often)")
    if not theorem:
        if isinstance(dom.algebra, SU):
            items: tuple = tuple(
                SuUnitaryItem(r.arrangement, r.profile, None) for r in rows if r.unitary
            )
        else:
            items = tuple(
                SoUnitaryItem(
                    r.arrangement,
                    r.profile,
                    "oracle",
                    "zero-absorbed" if r.arrangement.has_zero else "even",
                )
                for r in rows
                if r.unitary
            )
        return ClassificationResult(
            dom, normalized, integrality_class(dom), len(rows), items, True, tuple(notes), False
        )

    if isinstance(dom.algebra, SU):
        found = classify_su(dom, notes)
        theorem_set = {_key(it.split) for it in found}
    else:
        found = classify_so(dom, notes)
        theorem_set = {_key(it.arrangement) for it in found}
    agrees = theorem_set == oracle_set
    if not agrees:
        for k in sorted(oracle_set - theorem_set):
            notes.append(f"mismatch: oracle-only unitary conjugate {_fmt_key(k)}")
        for k in sorted(theorem_set - oracle_set):
            notes.append(f"mismatch: theorem-only conjugate {_fmt_key(k)}")
    return ClassificationResult(
        dom, normalized, integrality_class(dom), len(rows), tuple(found), agrees, tuple(notes)
    )


def _fmt_key(k) -> str:
    if len(k) == 2 and isinstance(k[0], tuple):
        return str(BarSplit(*k))
    return "(" + ", ".join(map(str, k)) + ")"


# ---------------------------------------------------------------- scans


@dataclass(frozen=True)
class Mismatch:
    dom: DominantParameter
    theorem_set: tuple[tuple[str, ...], ...]
    oracle_set: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class ScanReport:
    range: dict
    instances_checked: int
    mismatches: tuple[Mismatch, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def su_instances(max_rank: int, span: int) -> Iterator[DominantParameter]:
    """Dominant integral su(p, q) parameters up to translation: last coordinate 0, first <= span."""
    for n in range(2, max_rank + 1):
        for p in range(1, n // 2 + 1):
            alg = SU(p, n - p)
            for comb in itertools.combinations_with_replacement(range(span, -1, -1), n - 1):
                yield DominantParameter(alg, tuple(comb) + (0,))


def so_instances(max_n: int, bound: HalfInteger) -> Iterator[DominantParameter]:
    """Dominant so*(2n) parameters with |coordinates| <= bound, both integrality classes."""
    top = bound.doubled
    for n in range(2, max_n + 1):
        alg = SOStar(n)
        for start in (0, 1):
            values = [HalfInteger.from_doubled(d) for d in range(top - (top - start) % 2, -1, -2)]
            for comb in itertools.combinations_with_replacement(values, n):
                yield DominantParameter(alg, comb)
                if comb[-1] != 0:
                    yield DominantParameter(alg, comb[:-1] + (-comb[-1],))


def count_su_instances(max_rank: int, span: int) -> int:
    return sum(
        math.comb(span + n - 1, n - 1) * (n // 2) for n in range(2, max_rank + 1)
    )


def count_so_instances(max_n: int, bound: HalfInteger) -> int:
    total = 0
    for n in range(2, max_n + 1):
        for start in (0, 1):
            k = len(range(start, bound.doubled + 1, 2))
            multisets = math.comb(k + n - 1, n)
            # every multiset whose smallest entry is nonzero also comes with a negated last entry
            with_zero = math.comb(k + n - 2, n - 1) if start == 0 else 0
            total += 2 * multisets - with_zero
    return total


def _check(dom: DominantParameter) -> Optional[Mismatch]:
    if isinstance(dom.algebra, SU):
        th = {it.split for it in classify_su(dom)}
        orc = {s for s in enumerate_su(dom) if is_unitary_su(s)}
        render = lambda s: (",".join(map(str, s.left)), ",".join(map(str, s.right)))  # noqa: E731
    else:
        th = {it.arrangement.coords for it in classify_so(dom)}
        orc = {a.coords for a in enumerate_so(dom) if is_unitary_so(a)}
        render = lambda c: (",".join(map(str, c)),)  # noqa: E731
    if th == orc:
        return None
    return Mismatch(dom, tuple(sorted(map(render, th))), tuple(sorted(map(render, orc))))


def run_scan(instances, range_desc: dict, jobs: int = 1) -> ScanReport:
    t0 = time.perf_counter()
    instances = list(instances)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check, instances, chunksize=256))
    else:
        results = [_check(d) for d in instances]
    mismatches = tuple(m for m in results if m is not None)
    elapsed = int((time.perf_counter() - t0) * 1000)
    return ScanReport(range_desc, len(instances), mismatches, {"elapsed_ms": elapsed})


def scan_su(max_rank: int, span: int, limit: int = DEFAULT_LIMIT, jobs: int = 1) -> ScanReport:
    est = count_su_instances(max_rank, span)
    if est > limit:
        raise LimitExceededError(f"scan would check {est} instances, limit is {limit}")
    desc = {"family": "su", "max_rank": max_rank, "span": span}
    return run_scan(su_instances(max_rank, span), desc, jobs)


def scan_so(max_n: int, bound, limit: int = DEFAULT_LIMIT, jobs: int = 1) -> ScanReport:
    bound = HalfInteger(bound)
    est = count_so_instances(max_n, bound)
    if est > limit:
        raise LimitExceededError(f"scan would check {est} instances, limit is {limit}")
    desc = {"family": "so*", "max_n": max_n, "bound": str(bound)}
    return run_scan(so_instances(max_n, bound), desc, jobs)


# ---------------------------------------------------------------- JSON


def _c(coords) -> list[str]:
    return [str(c) for c in coords]


def _uc(strs) -> tuple[HalfInteger, ...]:
    return tuple(parse_half(s) for s in strs)


def algebra_to_dict(alg: Algebra) -> dict:
    if isinstance(alg, SU):
        return {"type": "su", "p": alg.p, "q": alg.q}
    return {"type": "so*", "n": alg.n}


def algebra_from_dict(d: dict) -> Algebra:
    if d["type"] == "su":
        return SU(d["p"], d["q"])
    return SOStar(d["n"])


def _form_to_dict(form) -> Optional[dict]:
    if form is None:
        return None
    if isinstance(form, Tilde):
        return {"kind": "tilde"}
    if isinstance(form, RegularString):
        return {"kind": "regular", "s": form.s, "r": form.r, "a": form.a, "b": form.b, "c": form.c}
    return {
        "kind": "singular",
        "index": form.index,
        "name": form.name,
        "pivot": form.pivot,
        "c1_cut": form.c1_cut,
        "c2_cut": form.c2_cut,
        "b_cut": form.b_cut,
        "outer_cut": form.outer_cut,
    }


def _form_from_dict(d):
    if d is None:
        return None
    kind = d["kind"]
    if kind == "tilde":
        return Tilde()
    if kind == "regular":
        return RegularString(d["s"], d["r"], d["a"], d["b"], d["c"])
    return SingularForm(d["index"], d["pivot"], d["c1_cut"], d["c2_cut"], d["b_cut"], d["outer_cut"])


def _profile_to_dict(prof) -> dict:
    if isinstance(prof, StringProfile):
        return {"p_prime": prof.p_prime, "q_prime": prof.q_prime}
    if isinstance(prof, PCase):
        return {"case": "p", "p": prof.p}
    return {"case": "q", "q": prof.q}


def _profile_from_dict(d):
    if "p_prime" in d:
        return StringProfile(d["p_prime"], d["q_prime"])
    return PCase(d["p"]) if d["case"] == "p" else QCase(d["q"])


def _arr_to_dict(arr) -> dict:
    if isinstance(arr, BarSplit):
        return {"left": _c(arr.left), "right": _c(arr.right)}
    return {"coords": _c(arr.coords), "flips": arr.flips}


def _arr_from_dict(d):
    if "left" in d:
        return BarSplit(_uc(d["left"]), _uc(d["right"]))
    return SignedArrangement(_uc(d["coords"]), d["flips"])


def item_to_dict(item: Item) -> dict:
    if isinstance(item, SuUnitaryItem):
        return {
            "split": _arr_to_dict(item.split),
            "profile": _profile_to_dict(item.profile),
            "form": _form_to_dict(item.form),
        }
    return {
        "arrangement": _arr_to_dict(item.arrangement),
        "profile": _profile_to_dict(item.profile),
        "tag": item.tag,
        "parity_used": item.parity_used,
        "a": item.a,
    }


def item_from_dict(d: dict) -> Item:
    if "split" in d:
        return SuUnitaryItem(
            _arr_from_dict(d["split"]), _profile_from_dict(d["profile"]), _form_from_dict(d["form"])
        )
    return SoUnitaryItem(
        _arr_from_dict(d["arrangement"]),
        _profile_from_dict(d["profile"]),
        d["tag"],
        d["parity_used"],
        d["a"],
    )


def result_to_dict(res: ClassificationResult) -> dict:
    return {
        "algebra": algebra_to_dict(res.algebra),
        "input": _c(res.input.coords),
        "normalized": res.normalized,
        "integrality": res.integrality.value,
        "conjugate_count": res.conjugate_count,
        "items": [item_to_dict(it) for it in res.items],
        "oracle_agrees": res.oracle_agrees,
        "diagnostics": list(res.diagnostics),
        "theorem_run": res.theorem_run,
    }


def result_from_dict(d: dict) -> ClassificationResult:
    alg = algebra_from_dict(d["algebra"])
    return ClassificationResult(
        DominantParameter(alg, _uc(d["input"])),
        d["normalized"],
        Integrality(d["integrality"]),
        d["conjugate_count"],
        tuple(item_from_dict(x) for x in d["items"]),
        d["oracle_agrees"],
        tuple(d["diagnostics"]),
        d["theorem_run"],
    )


def _mark_to_dict(mark: Mark) -> Optional[dict]:
    if mark is None:
        return None
    if isinstance(mark, TildeRho):
        return {"kind": "tilde"}
    if isinstance(mark, Edge):
        return {"kind": "edge", "i": mark.i, "j": mark.j}
    if isinstance(mark, QEdge):
        return {"kind": "q-edge", "q": mark.q}
    return {"kind": "p-edge", "p": mark.p}


def _mark_from_dict(d) -> Mark:
    if d is None:
        return None
    return {
        "tilde": lambda: TildeRho(),
        "edge": lambda: Edge(d["i"], d["j"]),
        "q-edge": lambda: QEdge(d["q"]),
        "p-edge": lambda: PEdge(d["p"]),
    }[d["kind"]]()


def hasse_to_dict(h: HasseDiagram) -> dict:
    return {
        "algebra": algebra_to_dict(h.algebra),
        "nodes": [
            {
                "arrangement": _arr_to_dict(nd.arrangement),
                "young": list(nd.young.rows),
                "unitary": nd.unitary,
                "mark": _mark_to_dict(nd.mark),
            }
            for nd in h.nodes
        ],
        "covers": [list(c) for c in h.covers],
    }


def hasse_from_dict(d: dict) -> HasseDiagram:
    nodes = tuple(
        HasseNode(
            _arr_from_dict(x["arrangement"]),
            YoungDiagram(tuple(x["young"])),
            x["unitary"],
            _mark_from_dict(x["mark"]),
        )
        for x in d["nodes"]
    )
    return HasseDiagram(algebra_from_dict(d["algebra"]), nodes, tuple(tuple(c) for c in d["covers"]))


def scan_to_dict(rep: ScanReport) -> dict:
    return {
        "range": rep.range,
        "instances_checked": rep.instances_checked,
        "mismatches": [
            {
                "algebra": algebra_to_dict(m.dom.algebra),
                "dom": _c(m.dom.coords),
                "theorem_set": [list(x) for x in m.theorem_set],
                "oracle_set": [list(x) for x in m.oracle_set],
            }
            for m in rep.mismatches
        ],
        "metadata": rep.metadata,
    }


def scan_from_dict(d: dict) -> ScanReport:
    mism = tuple(
        Mismatch(
            DominantParameter(algebra_from_dict(m["algebra"]), _uc(m["dom"])),
            tuple(tuple(x) for x in m["theorem_set"]),
            tuple(tuple(x) for x in m["oracle_set"]),
        )
        for m in d["mismatches"]
    )
    return ScanReport(d["range"], d["instances_checked"], mism, d.get("metadata", {}))


def to_json(obj) -> str:
    if isinstance(obj, ClassificationResult):
        d = result_to_dict(obj)
    elif isinstance(obj, HasseDiagram):
        d = hasse_to_dict(obj)
    elif isinstance(obj, ScanReport):
        d = scan_to_dict(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


def from_json(text: str):
    d = json.loads(text)
    if "conjugate_count" in d:
        return result_from_dict(d)
    if "covers" in d:
        return hasse_from_dict(d)
    return scan_from_dict(d)
