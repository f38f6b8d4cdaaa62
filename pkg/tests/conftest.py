from fractions import Fraction

from hypothesis import strategies as st

from cubarix.polynomial import Poly


def P(*coeffs) -> Poly:
    return Poly(list(coeffs))


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def polys(max_degree: int = 6):
    return st.lists(fractions, max_size=max_degree + 1).map(Poly)


def int_polys(max_degree: int = 6, bound: int = 30):
    return st.lists(st.integers(-bound, bound), max_size=max_degree + 1).map(Poly)


# verdict lines from test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["P", "Fraction", "fractions", "polys", "int_polys"]
