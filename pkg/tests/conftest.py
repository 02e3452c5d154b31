import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {
    1: "su(10,16) worked example: 45 conjugates, 3 unitary, under 1 s",
    2: "so*(16) integer example with a zero: 8 conjugates, 3 unitary, under 1 s",
    3: "so*(8) rho: 6 unitary conjugates and the 8-node Hasse diagram",
    4: "so*(18) half-integer example: 2 unitary, third candidate rejected by odd parity",
    5: "su(2,3) rho: 7 unitary nodes with edge marks i = c - b, j = b - a + 1",
    6: "theorem path equals oracle path over the full sweep",
    7: "translation-cone verdict equals the unitarity inequality",
    8: "structural invariants hold exhaustively",
}

_ID = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    outcomes: dict[int, list[str]] = {}
    for key in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(key, []):
            m = _ID.search(getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                outcomes.setdefault(int(m.group(1)), []).append(key)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc in CRITERIA.items():
        got = outcomes.get(num)
        if not got:
            status = "NOT RUN"
        elif all(o == "passed" for o in got):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  ({desc})")
