"""Order-preserving singular maps of a finite chain and their cone semigroups."""

import json

from ._oxn import (
    CompositionError,
    ConstructionError,
    ContractError,
    DimensionError,
    DomainError,
    Error,
    OPMap,
    ParseError,
    ResourceError,
    compose,
    enumerate_oxn,
    green,
    idempotent_for_image,
    registered_checks,
)
from . import _oxn

__all__ = [
    "CompositionError",
    "ConstructionError",
    "ContractError",
    "DimensionError",
    "DomainError",
    "Error",
    "OPMap",
    "ParseError",
    "ResourceError",
    "cayley_table",
    "compose",
    "enumerate_oxn",
    "green",
    "idempotent_for_image",
    "registered_checks",
    "run_check",
]


def run_check(name, n, seed=0):
    """Run a registered check and return its report as a dict."""
    return json.loads(_oxn.run_check_json(name, n, seed))


def cayley_table(selector, n):
    """Cayley table of "oxn", "TL", "TR", "TPo" or "TPi" as a dict."""
    return json.loads(_oxn.cayley_json(selector, n))
