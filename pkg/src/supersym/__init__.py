"""Exact supersymmetric and Laurent supersymmetric polynomial algebra."""

from .core import (
    BasisDecomposition,
    decompose,
    is_supersymmetric,
    kernel_witness,
    phi_s,
    power_sum,
    super_schur,
    super_schur_factored,
    t_element,
)
from .groupoid import Point, Root, atypicality, groupoid_orbit, separating_polynomial, weyl_orbit
from .laurent import SignaturePair, cod_check, decompose_r_sz, is_laurent_supersymmetric, k_element, phi_l
from .partitions import IntegerSignature, Partition
from .poly import NotDivisible, Polynomial, VarSpec, divide_exact, evaluate

__version__ = "0.1.0"
