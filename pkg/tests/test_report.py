import json

import pytest
from hypothesis import given, settings, strategies as st

from unitary_hw.errors import LimitExceededError
from unitary_hw.hasse import build_hasse
from unitary_hw.numeric import SU, Parameter, SOStar, halves, parse_coords
from unitary_hw.report import (
    classify,
    count_so_instances,
    count_su_instances,
    estimate_conjugates,
    from_json,
    scan_so,
    scan_su,
    so_instances,
    su_instances,
    to_json,
)


def test_classify_normalizes():
    res = classify(Parameter(SU(2, 3), halves([0, -1, 2, 1, -2])))
    assert res.normalized and res.input.coords == halves([2, 1, 0, -1, -2])
    assert res.conjugate_count == 10 and len(res.items) == 7 and res.oracle_agrees
    assert any("normalized" in d for d in res.diagnostics)


def test_classify_oracle_only():
    res = classify(Parameter(SOStar(4), halves([3, 2, 1, 0])), theorem=False)
    assert not res.theorem_run and len(res.items) == 6


def test_limit():
    p = Parameter(SU(10, 16), parse_coords("18,16,15,12,11,10,10,9,9,8,8,7,6,5,5,4,3,3,2,2,1,0,0,-1,-1,-5"))
    assert estimate_conjugates(p) == 45
    with pytest.raises(LimitExceededError):
        classify(p, limit=44)
    with pytest.raises(LimitExceededError):
        scan_su(7, 7, limit=100)


def test_instance_counts():
    assert count_su_instances(5, 4) == sum(1 for _ in su_instances(5, 4))
    for n, b in [(3, "3"), (4, "7/2"), (5, "6")]:
        bound = parse_coords(b)[0]
        assert count_so_instances(n, bound) == sum(1 for _ in so_instances(n, bound))


def test_scan_degenerate_family():
    rep = scan_so(3, parse_coords("1")[0])
    assert rep.agrees and rep.instances_checked > 0
    assert "elapsed_ms" in rep.metadata


def test_scan_parallel_matches_serial():
    a = scan_su(5, 4)
    b = scan_su(5, 4, jobs=2)
    assert a == b and a.agrees


EXAMPLES = [
    (SU(10, 16), "18,16,15,12,11,10,10,9,9,8,8,7,6,5,5,4,3,3,2,2,1,0,0,-1,-1,-5"),
    (SU(2, 3), "2,1,0,-1,-2"),
    (SU(2, 3), "3,2,1,0,0"),
    (SOStar(8), "9,4,3,3,2,1,1,0"),
    (SOStar(9), "13/2,9/2,7/2,5/2,5/2,3/2,3/2,1/2,-1/2"),
    (SOStar(3), "3,3,3"),
]


@pytest.mark.parametrize("alg, text", EXAMPLES)
@pytest.mark.parametrize("theorem", [True, False])
def test_result_roundtrip(alg, text, theorem):
    res = classify(Parameter(alg, parse_coords(text)), theorem=theorem)
    blob = to_json(res)
    assert from_json(blob) == res
    assert to_json(from_json(blob)) == blob


def test_json_has_no_floats():
    blob = to_json(classify(Parameter(SOStar(9), parse_coords(EXAMPLES[4][1]))))

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(json.loads(blob))
    assert '"13/2"' in blob


@pytest.mark.parametrize("alg", [SU(1, 1), SU(2, 3), SOStar(4), SOStar(5)])
def test_hasse_roundtrip(alg):
    h = build_hasse(alg)
    assert from_json(to_json(h)) == h


def test_scan_roundtrip_ignores_timing():
    rep = scan_su(4, 3)
    back = from_json(to_json(rep))
    assert back == rep and back.metadata == rep.metadata


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 3), st.lists(st.integers(0, 6), min_size=2, max_size=6))
def test_roundtrip_random_su(p, extra, vals):
    q = p + extra
    vals = (vals * (p + q))[: p + q]
    res = classify(Parameter(SU(p, q), halves(vals)))
    assert from_json(to_json(res)) == res
