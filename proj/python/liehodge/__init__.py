"""Exact Laplacian, Casimir and affine Weyl group computations for symmetric pairs."""

import json
from fractions import Fraction

from ._core import HomologyEngine, ParseError, SymmetricPair, _verify_json

__all__ = [
    "HomologyEngine",
    "ParseError",
    "SymmetricPair",
    "abelian",
    "describe",
    "report",
    "spectrum",
    "verify",
]


def _pair(pair):
    return pair if isinstance(pair, SymmetricPair) else SymmetricPair(pair)


def _engine(pair, d_bound=3):
    return HomologyEngine(_pair(pair), d_bound)


def describe(pair, d_bound=3):
    return json.loads(_engine(pair, d_bound)._describe_json())


def abelian(pair):
    return json.loads(_engine(pair)._abelian_json())


def spectrum(pair, p_max=4):
    sp = _pair(pair)
    engine = HomologyEngine(sp)
    return [json.loads(engine._spectrum_json(p)) for p in range(min(p_max, sp.dim_p) + 1)]


def report(pair, p, s, which=("all",)):
    return json.loads(_engine(pair)._report_json(p, Fraction(s), list(which)))


def verify(pair, p_max=4, s_max=3, d_bound=3, which=("all",), jobs=1, negative_control=False):
    name = pair.name if isinstance(pair, SymmetricPair) else pair
    return json.loads(_verify_json(name, p_max, Fraction(s_max), Fraction(d_bound), list(which), jobs, negative_control))


def fraction(text):
    """Parses the "num/den" strings used in reports."""
    return Fraction(text)
