"""Knobs for the bounded searches and the randomized sweeps."""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class FM3SearchConfig:
    fields: tuple = (2, 3)  # field sizes tried in order
    max_dim: int = 8  # smallest ambient dimension that can host a 28-element sublattice


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 20240
    field_law_triples: int = 500
    chain_cases_per_size: int = 40
    max_chain_size: int = 6
    random_posets: int = 90
    max_poset_size: int = 8
    ideal_discriminants: tuple = (-5, -6)
    ideal_max_norm: int = 500
    ladder_max: int = 12
    ladder_budget: int = 10 ** 6  # successor steps per cell, about half a second
    fm3: FM3SearchConfig = field(default_factory=FM3SearchConfig)
