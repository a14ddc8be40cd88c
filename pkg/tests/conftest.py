import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call":
                continue
            for name, value in getattr(rep, "user_properties", []):
                if name == "acceptance":
                    lines.append((rep.nodeid, value))
    if lines:
        terminalreporter.section("acceptance criteria")
        order = lambda item: int(item[0].rsplit("[", 1)[1].rstrip("]"))
        for _, line in sorted(lines, key=order):
            terminalreporter.write_line(line)
