from hypothesis import settings

# fixed seed and no per-example deadline: crystal builds are cached lazily
settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")

# filled by test_acceptance; printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %d: %s  %s" % (n, "PASS" if ok else "FAIL", note))
