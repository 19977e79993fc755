import re

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    results = {}
    for key in ("passed", "failed", "xfailed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if not m or rep.when not in ("call", "setup"):
                continue
            num = int(m.group(1))
            if key == "passed":
                results.setdefault(num, "PASS")
            elif key == "xfailed":
                results[num] = "FAIL (reported, non-fatal)"
            else:
                results[num] = "FAIL"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(f"criterion {num:2d}: {results[num]}")
