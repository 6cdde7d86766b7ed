"""Bundled example situations, shipped as instance documents.

The five named instances cover the behaviours the test-suite leans on: a
reinstatement chain with a decisive composite supporter (weather), two
equally-credible rivals (variant), a two-branch counter/counter-counter
situation with reinstated supporters (budget), an ambivalent trump that
leaves a proposition undecided (flicker), and a trump-free pool (empty).
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .core import DecisionSituation
from .models import Model

FIXTURE_NAMES = ("budget", "empty", "flicker", "variant", "weather")


def _builders() -> dict[str, DecisionSituation]:
    weather = DecisionSituation.from_perspectives(
        propositions=["t"],
        arguments=["s1", "s2", "s3", "s"],
        support=[("s1", "t"), ("s", "t")],
        perspectives={"p1": [("s2", "s1"), ("s3", "s2")]},
    )
    variant = DecisionSituation.from_perspectives(
        propositions=["t1", "t2"],
        arguments=["s1", "s2"],
        support=[("s1", "t1"), ("s2", "t2")],
        perspectives={"p1": []},
    )
    budget = DecisionSituation.from_perspectives(
        propositions=["t"],
        arguments=["s", "sc1", "sc2", "sc1c", "sc2c", "s1r", "s2r", "sr"],
        support=[("s", "t"), ("s1r", "t"), ("s2r", "t"), ("sr", "t")],
        perspectives={
            "p1": [
                ("sc1", "s"),
                ("sc2", "s"),
                ("sc1c", "sc1"),
                ("sc2c", "sc2"),
                ("sc2", "s1r"),
                ("sc1", "s2r"),
            ]
        },
    )
    flicker = DecisionSituation.from_perspectives(
        propositions=["t"],
        arguments=["s1", "s2"],
        support=[("s1", "t")],
        perspectives={"p1": [("s2", "s1")], "p2": []},
    )
    empty = DecisionSituation.from_perspectives(
        propositions=["t"],
        arguments=["s1", "s2"],
        support=[("s1", "t")],
        perspectives={"p1": []},
    )
    return {
        "weather": weather,
        "variant": variant,
        "budget": budget,
        "flicker": flicker,
        "empty": empty,
    }


def instance_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return (
        resources.files("deliberated")
        .joinpath("instances", f"{name}.json")
        .read_text(encoding="utf-8")
    )


@lru_cache(maxsize=None)
def load_fixture(name: str) -> DecisionSituation:
    from .formats import parse_instance

    return parse_instance(instance_text(name))


def budget_model() -> Model:
    """The analyst model walked through in the budget elicitation example."""
    return Model.of(
        support=[("s", "t")],
        counters=[("sc1c", "sc1"), ("sc2c", "sc2")],
    )
