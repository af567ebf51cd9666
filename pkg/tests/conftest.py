import pytest
from hypothesis import HealthCheck, settings

from algcat.zoo import standard_zoo

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def zoo():
    return standard_zoo()


@pytest.fixture
def acceptance_report():
    """Recorder for the one-line-per-criterion acceptance verdicts; the lines
    surface in the terminal summary regardless of capture mode."""

    def record(num: int, name: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {num:2d} {name}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
