"""Exact Schubert calculus and explicit KP filtrations of Pieri tensor products."""

from .permutation import Permutation, transposition
from .schubert import Polynomial, schubert
from .pieri import PieriChain, enumerate_X, enumerate_Y, verify_pieri
from .exterior import EchelonSpan, act_e, character, generate_span, kp_module, u_of
from .filtration import build_filtration, build_v, apply_phi, check_main_proposition

__all__ = [
    "Permutation", "transposition", "Polynomial", "schubert",
    "PieriChain", "enumerate_X", "enumerate_Y", "verify_pieri",
    "EchelonSpan", "act_e", "character", "generate_span", "kp_module", "u_of",
    "build_filtration", "build_v", "apply_phi", "check_main_proposition",
]
