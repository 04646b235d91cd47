"""Bisimulation checkers for sabotage and point-deletion modal logics.

Models are plain dicts in the JSON model format (or JSON text). Verdicts are
dicts with ``answer`` ("yes"/"no"), ``max_depth``, ``calls`` and ``witness``.
"""

import json

from . import _core
from ._core import SabotageError, SizeGuardExceeded

__all__ = [
    "SabotageError",
    "SizeGuardExceeded",
    "char_check",
    "characteristic_formula",
    "check",
    "evaluate",
    "normalize_model",
    "oracle",
    "parse_formula",
    "random_model",
    "translate_f",
    "translate_g",
]

KINDS = ("modal", "s", "d", "g", "r")


def _text(model):
    return model if isinstance(model, str) else json.dumps(model)


def normalize_model(model):
    """Validate a model and return it in canonical order."""
    return json.loads(_core.normalize_model(_text(model)))


def check(kind, a, b, *, cache=False, max_calls=0):
    """Decide kind-bisimilarity of two pointed models with the recursive checker."""
    return json.loads(_core.check(kind, _text(a), _text(b), cache, max_calls))


def oracle(kind, a, b):
    """Decide kind-bisimilarity with the greatest-fixpoint oracle."""
    return json.loads(_core.oracle(kind, _text(a), _text(b)))


def parse_formula(text):
    """Parse formula text and return its canonical printed form."""
    return _core.parse_formula(text)


def evaluate(model, formula, *, all_worlds=False):
    """Truth of a formula at the designated world, or a dict over all worlds."""
    if all_worlds:
        return dict(_core.evaluate_all(_text(model), formula))
    return _core.evaluate(_text(model), formula)


def characteristic_formula(kind, model, *, all_worlds=False):
    """Characteristic formula of the model for kind s, d, g or r.

    World-deletion sequences skip the designated world unless ``all_worlds``.
    """
    return _core.characteristic_formula(kind, _text(model), all_worlds)


def char_check(kind, a, b):
    """Evaluate the characteristic formula of ``a`` on the canonical expansion of ``b``."""
    return _core.char_check(kind, _text(a), _text(b))


def translate_f(model):
    """Replace every edge by a fresh world marked with ``i``."""
    return json.loads(_core.translate_f(_text(model)))


def translate_g(model, edges_to_sink="literal"):
    """Add the sink world ``w_j`` marked with ``j``."""
    return json.loads(_core.translate_g(_text(model), edges_to_sink))


def random_model(seed, worlds=3, edges=4, props=("p",)):
    """Seeded random pointed model with at most the given numbers of worlds and edges."""
    return json.loads(_core.random_model(seed, worlds, edges, list(props)))
