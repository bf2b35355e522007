"""Bundled example networks."""

from importlib.resources import files

from .io import parse_network
from .network import Network


def demo_energy_network() -> Network:
    """A six-station transmission network used throughout the docs.

    Stations a through e plus a sink z, mostly one-way links, and one
    two-way link between d and e.  The best chain from a to z runs
    a b c d z with efficiency 0.93168306; the detour through e loses to
    it because e's outgoing link is weaker.
    """
    text = (files("effchain") / "data" / "energy_demo.csv").read_text(
        encoding="utf-8"
    )
    return parse_network(text)
