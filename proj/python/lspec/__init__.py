"""Python access to the lspec core."""

import json

from ._core import (
    LspecError,
    NumberField,
    PrimeIdeal,
    frobenius_vector,
    gap_tuples,
    split_symbol,
    target_primes,
)
from . import _core


def dedekind_zeta_2(field, cutoff=1_000_000, precision=128):
    return json.loads(_core.zeta2_json(field, cutoff, precision))


def borel_volume(field, ram, cutoff=1_000_000, precision=128):
    return json.loads(_core.volume_json(field, list(ram), cutoff, precision))


def trace_to_geodesic(field, trace, precision=128):
    return json.loads(_core.geodesic_json(field, trace, precision))


def admits_embedding(field, ram, extension):
    return json.loads(_core.embedding_json(field, list(ram), extension))


def torsion_free_check(field, ram, n_max=12, height=10_000):
    return json.loads(_core.torsion_json(field, list(ram), n_max, height))


def construct_twins(request_text, threads=1):
    return json.loads(_core.construct_twins_json(request_text, threads))


def verify_report(report):
    if not isinstance(report, str):
        report = json.dumps(report)
    return json.loads(_core.verify_report_json(report))


__all__ = [
    "LspecError",
    "NumberField",
    "PrimeIdeal",
    "admits_embedding",
    "borel_volume",
    "construct_twins",
    "dedekind_zeta_2",
    "frobenius_vector",
    "gap_tuples",
    "split_symbol",
    "target_primes",
    "torsion_free_check",
    "trace_to_geodesic",
    "verify_report",
]
