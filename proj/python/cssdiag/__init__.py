"""Diagonal gates on CSS codes: codespace preservation, induced logical gates and the
quadratic-form code family.

Codes, gates and logical tables are plain dicts in the same JSON layout the CLI reads.
"""

import json

from . import _core
from ._core import InputError, family_pairs, lemma3_phase

__all__ = [
    "InputError",
    "build_family",
    "check",
    "family_pairs",
    "generator_coefficient",
    "lemma3_phase",
    "run_cli",
    "target",
    "verify",
    "weights",
]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def check(code, gate):
    """Preservation verdict and induced logical table (None when not preserved)."""
    return json.loads(_core.check(_dump(code), _dump(gate)))


def verify(code, gate, claimed=None):
    """Sparse-state oracle report; claimed defaults to the induced logical."""
    return json.loads(_core.verify(_dump(code), _dump(gate), "" if claimed is None else _dump(claimed)))


def target(code, target):
    return json.loads(_core.target(_dump(code), _dump(target)))


def weights(code, of="c1", shift=""):
    return {int(w): c for w, c in json.loads(_core.weights(_dump(code), of, shift)).items()}


def generator_coefficient(code, gate, mu, gamma):
    return json.loads(_core.generator_coefficient(_dump(code), _dump(gate), mu, gamma))


def build_family(m, pairs=(), all_pairs=False):
    if all_pairs:
        pairs = family_pairs(m)
    return json.loads(_core.build_family(m, [tuple(p) for p in pairs]))


def run_cli(args):
    """Returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
