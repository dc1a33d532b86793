"""Resource caps.

Caps are configuration: every enumeration that can blow up consults the
active :class:`Caps` and raises :class:`~coverreg.errors.ResourceLimitError`
instead of running away. Defaults can be overridden through the
``COVERREG_CAPS`` environment variable (JSON object or ``key=value`` list).
"""

from __future__ import annotations

import dataclasses
import json
import os
from contextlib import contextmanager
from dataclasses import dataclass

ENV_VAR = "COVERREG_CAPS"


@dataclass(frozen=True)
class Caps:
    max_vertices: int = 32
    independent_set_vertices: int = 20
    max_cycles: int = 10**6
    max_subsets: int = 2**22
    max_faces: int = 2_000_000
    max_box: int = 10**7
    taylor_generators: int = 15
    lq_generators: int = 16
    subgraph_edges: int = 10

    def replace(self, **changes) -> "Caps":
        return dataclasses.replace(self, **changes)


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """Parse ``'{"max_faces": 10}'`` or ``'max_faces=10,taylor_generators=12'``."""
    base = base or Caps()
    text = text.strip()
    if not text:
        return base
    if text.startswith("{"):
        raw = json.loads(text)
    else:
        raw = {}
        for item in text.split(","):
            key, _, value = item.partition("=")
            raw[key.strip()] = value.strip()
    names = {f.name for f in dataclasses.fields(Caps)}
    unknown = set(raw) - names
    if unknown:
        raise ValueError(f"unknown cap(s): {', '.join(sorted(unknown))}")
    return base.replace(**{k: int(v) for k, v in raw.items()})


def _from_env() -> Caps:
    text = os.environ.get(ENV_VAR, "")
    return parse_caps(text) if text else Caps()


_active = _from_env()


def get_caps() -> Caps:
    return _active


def set_caps(caps: Caps) -> None:
    global _active
    _active = caps


@contextmanager
def caps_override(**changes):
    """Temporarily change caps, e.g. ``with caps_override(max_faces=100): ...``."""
    global _active
    saved = _active
    _active = saved.replace(**changes)
    try:
        yield _active
    finally:
        _active = saved
