"""Benchmark corpus of small spaces with known predicate verdicts.

Each fixture is a space plus a list of assertions: the verdict an
authoritative worked example states for a predicate on that space.  The
claims runner recomputes every verdict with the engine and reports any
disagreement as a fixture mismatch rather than silently trusting either
side.  Fixture e14 is expected to mismatch on two of its g-closedness
assertions; the recorded expectation file pins that down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gbt import GbtSpace, make_space


@dataclass(frozen=True)
class Assertion:
    predicate: str
    args: tuple[tuple[str, object], ...]
    expected: object

    def arg(self, key: str, default=None):
        return dict(self.args).get(key, default)

    def describe(self) -> str:
        parts = [self.predicate]
        for key, value in self.args:
            parts.append(f"{key}={value}")
        return " ".join(parts)


def _a(predicate: str, expected: object, **args) -> Assertion:
    return Assertion(predicate, tuple(sorted(args.items())), expected)


@dataclass(frozen=True)
class Fixture:
    id: str
    points: tuple[str, ...]
    mu1: tuple[tuple[str, ...], ...]
    mu2: tuple[tuple[str, ...], ...]
    assertions: tuple[Assertion, ...]

    def space(self) -> GbtSpace:
        return _fixture_space(self.id)


@lru_cache(maxsize=None)
def _fixture_space(fixture_id: str) -> GbtSpace:
    fixture = get_fixture(fixture_id)
    return make_space(fixture.points, fixture.mu1, fixture.mu2)


FIXTURES: tuple[Fixture, ...] = (
    Fixture(
        "e11",
        ("a", "b", "c"),
        (("c",), ("a", "c")),
        (("b",), ("a", "b")),
        (
            _a("g-closed-wrt", True, side=1, set=("a",)),
            _a("mu-closed", False, side=1, set=("a",)),
            _a("g-closed-wrt", True, side=2, set=("b", "c")),
            _a("mu-closed", False, side=2, set=("b", "c")),
            _a("T0", True),
            _a("T1_2", False),
        ),
    ),
    Fixture(
        "e13",
        ("a", "b", "c"),
        (("a",), ("a", "b")),
        (("b",), ("b", "c")),
        (
            _a("closure-equals", ("b", "c"), side=1, set=("b",)),
            _a("gap-has-no-closed", True, side=1, set=("b",)),
            _a("g-closed-wrt", False, side=1, set=("b",)),
        ),
    ),
    Fixture(
        "e14",
        ("a", "b", "c", "d"),
        (("a", "d"), ("c", "d"), ("a", "c", "d")),
        (("d",), ("a", "c", "d")),
        (
            _a("g-closed-wrt", True, side=1, set=("a", "d")),
            _a("g-closed-wrt", True, side=1, set=("c", "d")),
            _a("g-closed-wrt", False, side=1, set=("d",)),
            _a("g-closed-wrt", False, side=1, set=("a", "c", "d")),
        ),
    ),
    Fixture(
        "e17",
        ("a", "b", "c"),
        (("a",),),
        (("b",),),
        (
            _a("T0", True),
            _a("T1", False),
            _a("gt-T0", False, side=1),
            _a("gt-T0", False, side=2),
            _a("pairwise-lambda-closed", True, set=("c",)),
            _a("wedge12-set", False, set=("c",)),
            _a("pairwise-lambda-closed", False, set=("a", "b")),
            _a("T1_4", False),
        ),
    ),
    Fixture(
        "e22",
        ("a", "b", "c"),
        (("b", "c"), ("c", "a"), ("a", "b", "c")),
        (("a", "b"),),
        (
            _a("singletons-closed-somewhere", True),
            _a("T1", False),
        ),
    ),
    Fixture(
        "e25",
        ("a", "b"),
        (("a",),),
        (("b",),),
        (
            _a("T1", True),
            _a("gt-T1", False, side=1),
            _a("gt-T1", False, side=2),
        ),
    ),
    Fixture(
        "e26",
        ("a", "b", "c"),
        (("a", "b"), ("b", "c"), ("c", "a"), ("a", "b", "c")),
        (("a", "b"),),
        (
            _a("gt-T1", True, side=1),
            _a("T1", False),
        ),
    ),
    Fixture(
        "e31",
        ("a", "b", "c", "d"),
        (("a",), ("b",), ("a", "b")),
        (("a", "b", "c", "d"), ("a", "b", "d"), ("a", "b", "c")),
        (
            _a("singletons-open-or-closed", True, open_side=1, closed_side=2),
            _a("g-closed-wrt", True, side=2, set=("b", "c", "d")),
            _a("mu-closed", False, side=2, set=("b", "c", "d")),
            _a("T1_2", False),
        ),
    ),
    Fixture(
        "e35",
        ("a", "b", "c"),
        (("a",), ("c",), ("a", "c")),
        (("b",), ("a", "b")),
        (
            _a("singletons-four-kind", True),
            _a("g-closed-wrt", True, side=2, set=("b",)),
            _a("mu-closed", False, side=2, set=("b",)),
            _a("g-closed-wrt", True, side=1, set=("a", "c")),
            _a("mu-closed", False, side=1, set=("a", "c")),
            _a("T1_2", False),
            _a("T1", True),
            _a("T5_8", True),
            _a("R0", False),
        ),
    ),
    Fixture(
        "e36",
        ("a", "b", "c", "d"),
        (
            ("a", "b", "c", "d"),
            ("a",),
            ("b",),
            ("a", "b"),
            ("a", "c", "d"),
            ("a", "b", "d"),
        ),
        (
            ("a", "b", "c", "d"),
            ("a",),
            ("d",),
            ("a", "d"),
            ("a", "b", "c"),
            ("a", "b", "d"),
        ),
        (
            _a("T1_2", True),
            _a("T1", False),
        ),
    ),
    Fixture(
        "e39",
        ("a", "b", "c"),
        (("a",),),
        (("a", "b"),),
        (
            _a("lambda-closed-wrt", True, side=1, set=("b",)),
            _a("wedge-set", False, side=2, set=("b",)),
            _a("mu-closed", False, side=1, set=("b",)),
        ),
    ),
    Fixture(
        "e43a",
        ("a", "b", "c", "d"),
        (("a",), ("a", "d")),
        (("b",), ("b", "d")),
        (
            _a("g-closed-wrt", True, side=1, set=("c",)),
            _a("lambda-closed-wrt", False, side=1, set=("c",)),
            _a("g-closed-wrt", True, side=2, set=("b",)),
            _a("lambda-closed-wrt", False, side=2, set=("b",)),
        ),
    ),
    Fixture(
        "e43b",
        ("a", "b", "c", "d"),
        (("a",), ("a", "d")),
        (("a", "b"), ("c",), ("a", "b", "c")),
        (
            _a("lambda-closed-wrt", True, side=2, set=("a",)),
            _a("g-closed-wrt", False, side=2, set=("a",)),
            _a("lambda-closed-wrt", True, side=1, set=("b",)),
            _a("g-closed-wrt", False, side=1, set=("b",)),
        ),
    ),
    Fixture(
        "e46a",
        ("a", "b", "c", "d"),
        (("a", "d"), ("b", "d"), ("a", "b", "d")),
        (("a", "b", "c"),),
        (
            _a("lambda-closed-wrt", False, side=1, set=("a",)),
            _a("lambda-closed-wrt", False, side=2, set=("a",)),
            _a("pairwise-lambda-closed", True, set=("a",)),
        ),
    ),
    Fixture(
        "e46b",
        ("a", "b", "c", "d"),
        (("a",), ("a", "c", "d")),
        (("a", "b", "c"),),
        (
            _a("lambda-closed-wrt", True, side=2, set=("a",)),
            _a("lambda-closed-wrt", True, side=2, set=("d",)),
            _a("lambda-closed-wrt", False, side=2, set=("a", "d")),
            _a("pairwise-lambda-closed", True, set=("a",)),
            _a("pairwise-lambda-closed", True, set=("d",)),
            _a("pairwise-lambda-closed", False, set=("a", "d")),
        ),
    ),
)

FIXTURE_IDS = tuple(f.id for f in FIXTURES)


def get_fixture(fixture_id: str) -> Fixture:
    for fixture in FIXTURES:
        if fixture.id == fixture_id.lower():
            return fixture
    raise KeyError(f"unknown fixture {fixture_id!r}; known: {', '.join(FIXTURE_IDS)}")
