def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                cid = rep.nodeid.rsplit("[", 1)[1].rstrip("]")
                lines.append((cid, outcome.upper()[:4]))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    key = lambda x: (int("".join(ch for ch in x[0] if ch.isdigit())), x[0])
    for cid, outcome in sorted(lines, key=key):
        terminalreporter.write_line(f"{outcome}  criterion {cid}")
