"""Evaluation codes over finite fields: parameters, generalized Hamming weights, footprints."""

import json

from ._evalcode import (
    BudgetExceeded,
    Code,
    Error,
    Field,
    ParseError,
    PointSet,
    affine_space,
    evaluation_code,
    field,
    footprint_bound,
    ghw_bruteforce,
    projective_rm_code,
    read_point_file,
    repro_ids,
    rm_code,
    rm_footprint,
    set_threads,
    squarefree_code,
    squarefree_delta2,
    squarefree_footprint,
    squarefree_min_distance,
    toric_code,
    toric_min_distance,
    torus,
    vanishing_ideal,
    variety_points,
)
from . import _evalcode

__all__ = [
    "BudgetExceeded", "Code", "Error", "Field", "ParseError", "PointSet",
    "affine_space", "code_metadata", "evaluation_code", "field", "footprint_bound",
    "ghw", "ghw_bruteforce", "min_distance_recursive", "projective_rm_code",
    "read_point_file", "repro", "repro_ids", "rm_code", "rm_footprint", "set_threads",
    "squarefree_code", "squarefree_delta2", "squarefree_footprint",
    "squarefree_min_distance", "toric_code", "toric_min_distance", "torus",
    "vanishing_ideal", "variety_points", "weight_hierarchy",
]


def ghw(code, r, budget=5_000_000, verify_every=0, footprint=True):
    """delta_r by the degree method, as a dict with r, value, status, fp, witness, searched."""
    return json.loads(_evalcode._ghw(code, r, budget, verify_every, footprint))


def weight_hierarchy(code, **kwargs):
    return [ghw(code, r, **kwargs) for r in range(1, code.dimension + 1)]


def min_distance_recursive(points, d, budget=5_000_000):
    return json.loads(_evalcode._min_distance_recursive(points, d, budget))


def code_metadata(code):
    return json.loads(code._metadata())


def repro(example_id):
    return _evalcode._repro(example_id)
