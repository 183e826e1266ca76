"""Isolated missing points of non-proper polynomial maps of the plane."""
from .analysis import genericity_check, jelonek_set, kf_points, topological_degree
from .families import fixture, make_lemma23, make_thm14
from .lattice import Support, SupportPair, enumerate_face_pairs, mixed_volume
from .mapfile import parse_map, parse_poly
from .missing import missing_points, verify_candidate
from .polyring import GaussRat, Poly, PolyMap

__version__ = "0.1.0"

__all__ = ["GaussRat", "Poly", "PolyMap", "Support", "SupportPair", "enumerate_face_pairs",
           "mixed_volume", "genericity_check", "jelonek_set", "kf_points", "topological_degree",
           "missing_points", "verify_candidate", "fixture", "make_thm14", "make_lemma23",
           "parse_map", "parse_poly"]
