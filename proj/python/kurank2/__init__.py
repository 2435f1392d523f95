"""Python access to the kurank2 core: Pick decomposition, cubic threefold
Kuznetsov-component classes, nonemptiness certificates, catalog, graph."""

import json

from . import _kurank2 as _k
from ._kurank2 import (
    Error,
    chi,
    compatible,
    connected,
    delta_sin_sq,
    hilbert,
    lattice_svg,
    moduli_dim,
    parse_class,
    pick,
    symbolic,
)

__all__ = [
    "Error", "chi", "compatible", "connected", "delta_sin_sq", "hilbert",
    "lattice_svg", "moduli_dim", "parse_class", "pick", "symbolic",
    "catalog", "certify", "verify", "certify_all", "classify", "moduli_info",
    "birgraph",
]


def catalog():
    return json.loads(_k.catalog_json())


def certify(entry, a, b):
    return json.loads(_k.certify_json(entry, a, b))


def verify(cert):
    """cert: dict as returned by certify(). Returns (ok, failure message)."""
    return _k.verify_json(json.dumps(cert))


def certify_all(entry, bound, threads=1):
    return json.loads(_k.certify_all_json(entry, bound, threads))


def classify(q, d):
    """q, d: 2x2 integer matrices, row major, as nested lists or flat 4-tuples."""
    return json.loads(_k.classify_json(_flat(q), _flat(d)))


def moduli_info(n, m):
    return json.loads(_k.moduli_info_json(n, m))


def birgraph(bound):
    return json.loads(_k.birgraph_json(bound))


def _flat(x):
    x = list(x)
    if len(x) == 2:
        x = [*x[0], *x[1]]
    return [int(v) for v in x]
