import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from threej_zeros.threej import ReggeSquare, from_regge  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def regge_squares(draw, j_max: int = 20, j_min: int = 0) -> ReggeSquare:
    """Uniform-ish magic squares: pick J, then the four free entries in range."""
    J = draw(st.integers(j_min, j_max))
    r11 = draw(st.integers(0, J))
    r12 = draw(st.integers(0, J - r11))
    r21 = draw(st.integers(0, J - r11))
    lo = max(0, J - r11 - r12 - r21)
    hi = min(J - r21, J - r12)
    r22 = draw(st.integers(lo, hi))
    return ReggeSquare.from_rows(
        (
            (r11, r12, J - r11 - r12),
            (r21, r22, J - r21 - r22),
            (J - r11 - r21, J - r12 - r22, r11 + r12 + r21 + r22 - J),
        )
    )


def physical_symbols(j_max: int = 20, j_min: int = 0):
    return regge_squares(j_max, j_min).map(from_regge)


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion
# ---------------------------------------------------------------------------

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.rsplit("::", 1)[-1]
        detail = dict(report.user_properties).get("detail", "")
        _ACCEPTANCE[name] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[1][1:])):
        status, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{status}  {name}" + (f"  [{detail}]" if detail else ""))
