"""Numeric thresholds shared by every module.

Exact computations never consult these; they only govern the numeric tier
(root approximation, residual tests, de-duplication of inexact points).
"""
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    precision_bits: int = 128
    max_precision_bits: int = 512
    root_residual: float = 1e-28
    cluster_radius: float = 1e-20
    torus_zero: float = 1e-10
    backsub_residual: float = 1e-8
    dedup_radius: float = 1e-10
    implicit_residual: float = 1e-9
    # relative size below which a numerically computed coefficient is zero
    coeff_trim: float = 1e-20
    max_iterations: int = 600

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT = Tolerances()
