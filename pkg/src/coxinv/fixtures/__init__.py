"""Hand-transcribed reference diagrams stored as commented text files.

Each file records the drawing coordinates of its vertices and labels so the
transcription can be re-checked by eye.
"""

from importlib import resources

from ..diagram import PDiagram, parse_diagram

NAMES = (
    "fig1_left",
    "fig1_right",
    "fig1_binary_left",
    "fig1_binary_right",
    "fig2_w1",
    "fig2_w2",
    "fig2_w3",
    "fig2_w4",
)


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return resources.files(__name__).joinpath(f"{name}.cox").read_text()


def load_fixture(name: str) -> PDiagram:
    return parse_diagram(fixture_text(name))
