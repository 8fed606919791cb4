"""Recorded results of one-off searches, shipped with the package."""
from __future__ import annotations

import json
from importlib import resources

FM3_FIXTURE = "fm3_triple.json"


def load_fm3_record() -> dict:
    return json.loads(resources.files("dedekind_forge").joinpath("data", FM3_FIXTURE).read_text())
