import itertools
from fractions import Fraction

import pytest

from latticeflaw.paths import BoundarySpec, LatticePath

# Paths traced from the figures of the source material; (a, b, g) alongside.
FIG1 = ("NENEEEENNEEENN", (4, 3, 2))
FIG3A = ("EEEENNENEN" + "NENNEENEEE", (3, 2, 4))
FIG3B = ("EENENEEENEENNEN" + "NENEE", (3, 2, 4))
FIG4 = ("EENN" + "EEENNNENEE" + "E", (3, 2, 3))
FIG5A = ("EENNENE" + "ENENNEE", (4, 3, 2))
FIG5B = ("EENNENE" + "ENNENEE", (4, 3, 2))
FIG6A = ("EENN" + "ENE" + "NNEE" + "ENE", (4, 3, 2))
FIG6B = ("EENN" + "ENNENEE" + "ENE", (4, 3, 2))
FIG8_Q = "EENNENE" + "EENN" + "ENE"
FIG8_R1 = "EENEENENNE"
FIG8_R2 = "NNEE"
FIG8_Q1 = "EENNENE" + "EENN"
FIG8_Q2 = "ENE"
FIG8_R = "EEENENENNNENEE"
FIG8A = (FIG8_Q + FIG8_R1 + FIG8_R2, (4, 3, 4))
FIG8B = (FIG8_Q + FIG8_R2 + FIG8_R1, (4, 3, 4))
FIG8C = (FIG8_Q1 + FIG8_Q2 + FIG8_R, (4, 3, 4))
FIG8D = (FIG8_Q1 + FIG8_R + FIG8_Q2, (4, 3, 4))


def fig(entry):
    steps, abg = entry
    return LatticePath(steps), BoundarySpec(*abg)


def brute_paths(a, b, g):
    """All step strings to (ga, gb) by filtering the full product space."""
    n = g * (a + b)
    return ["".join(s) for s in itertools.product("EN", repeat=n) if s.count("E") == g * a]


def brute_points(steps):
    x = y = 0
    pts = [(0, 0)]
    for s in steps:
        x, y = (x + 1, y) if s == "E" else (x, y + 1)
        pts.append((x, y))
    return pts


def side(pt, a, b):
    """-1 below, 0 on, +1 above the line y = (b/a) x, decided with exact rationals."""
    x, y = pt
    line = Fraction(b, a) * x
    return (y > line) - (y < line)


def brute_flaws(steps, a, b):
    return sum(1 for pt in brute_points(steps) if side(pt, a, b) > 0)


def brute_table(a, b, g):
    counts = [0] * (g * (a + b))
    for s in brute_paths(a, b, g):
        counts[brute_flaws(s, a, b)] += 1
    return counts


@pytest.fixture
def table_spec():
    return BoundarySpec(3, 2, 4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
