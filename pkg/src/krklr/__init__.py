"""Affine crystals, Kirillov-Reshetikhin paths and the cyclotomic KLR modules
they label, with executable checks for every structural claim."""
from .cartan import FAMILIES, appendix_datum, build_cartan
from .crystal import CrystalGraph, TensorProduct, explore, rooted_iso
from .kr import build_b11

__version__ = "0.1.0"
