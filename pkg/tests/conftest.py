from fractions import Fraction as F

import pytest

from polypierce import Direction, Family, Point, RelatedPolygon, Template

# One line per acceptance criterion, echoed after the run summary so the
# pass/fail report is visible without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def translate_of(template: Template, v: Point) -> RelatedPolygon:
    """The member that is the template shifted by v (all directions kept)."""
    return RelatedPolygon(
        {
            j: template.reference_offsets[j] + template.normals[j].dot(v)
            for j in range(template.n)
        }
    )


@pytest.fixture
def unit_triangle() -> Template:
    """y >= 0, x >= 0, x + y <= 1, normals in cyclic angular order."""
    return Template([Direction(1, 1), Direction(-1, 0), Direction(0, -1)], [1, 0, 0])


@pytest.fixture
def three_translate_family(unit_triangle) -> Family:
    """Pairwise intersecting, empty total intersection; piercing number 2."""
    return Family(
        unit_triangle,
        [
            translate_of(unit_triangle, Point(0, 0)),
            translate_of(unit_triangle, Point(F(3, 5), 0)),
            translate_of(unit_triangle, Point(0, F(3, 5))),
        ],
    )


@pytest.fixture
def special_triangle() -> Template:
    """Special class, n=3: y >= 0, x <= 0, -x + y <= 1."""
    return Template([Direction(1, 0), Direction(-1, 1), Direction(0, -1)], [0, 1, 0])


@pytest.fixture
def special_three_translate(special_triangle) -> Family:
    return Family(
        special_triangle,
        [
            translate_of(special_triangle, Point(0, 0)),
            translate_of(special_triangle, Point(F(-3, 5), 0)),
            translate_of(special_triangle, Point(0, F(3, 5))),
        ],
    )
