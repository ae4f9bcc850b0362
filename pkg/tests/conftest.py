import pytest

# lines collected by the acceptance suite, echoed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def ctx_i():
    from ainf_elliptic.eisenstein import EisensteinContext
    return EisensteinContext("0+1i")


@pytest.fixture
def ctx_generic():
    from ainf_elliptic.eisenstein import EisensteinContext
    return EisensteinContext("0.3+1.2i")
