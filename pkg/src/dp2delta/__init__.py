"""Exact delta invariants of Du Val del Pezzo surfaces of degree 2."""

from .delta import DeltaCertificate, S_curve, S_flag, certify, delta_global
from .lattice import enumerate_line_classes, enumerate_roots, intersect, reflect
from .surfaces import AmbiguousType, UnknownType, build_surface, enumerate_embeddings
from .zariski import piecewise_family, zariski_decompose

__all__ = [
    "AmbiguousType", "DeltaCertificate", "S_curve", "S_flag", "UnknownType", "build_surface",
    "certify", "delta_global", "enumerate_embeddings", "enumerate_line_classes",
    "enumerate_roots", "intersect", "piecewise_family", "reflect", "zariski_decompose",
]
