from fractions import Fraction

from hypothesis import strategies as st

from sicfield.tower import FieldElement

_ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    _ACCEPTANCE_RESULTS.append((name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria")
    for name, passed in _ACCEPTANCE_RESULTS:
        label = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"  [{label}] {name}")


def small_fractions(max_num: int = 3, max_den: int = 3) -> st.SearchStrategy[Fraction]:
    return st.builds(
        Fraction,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def field_elements() -> st.SearchStrategy[FieldElement]:
    return st.builds(
        FieldElement,
        st.lists(small_fractions(), min_size=16, max_size=16),
    )


def nonzero_field_elements() -> st.SearchStrategy[FieldElement]:
    return field_elements().filter(lambda e: not e.is_zero())
