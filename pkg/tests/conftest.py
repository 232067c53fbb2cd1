import os

from hypothesis import HealthCheck, settings

from cyclicrank.superelliptic import catanese_dettweiler_spec, simple_cyclic_spec

settings.register_profile(
    "repo", max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", 40)), deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def spec_grid():
    """Concrete covers used across modules: reduced, infinity-branched and non-reduced."""
    return [
        simple_cyclic_spec(2, range(6), 1),
        simple_cyclic_spec(2, range(6), 2),
        simple_cyclic_spec(2, range(8), 2),
        simple_cyclic_spec(2, [0, 1, 2, 3, 4, "inf"], 1),
        simple_cyclic_spec(3, range(6), 1),
        simple_cyclic_spec(3, range(9), 1),
        simple_cyclic_spec(3, range(9), 2),
        simple_cyclic_spec(3, [0, 1, 2, 3, 4, "inf"], [1]),
        catanese_dettweiler_spec(5),
        catanese_dettweiler_spec(7),
    ]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
