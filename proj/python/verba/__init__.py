"""Python access to the verba word calculus. Results are plain dicts."""

import json

from . import _core
from ._core import VerbaError, canonical_word, is_commutator_word

__all__ = [
    "VerbaError",
    "atlas",
    "canonical_word",
    "classify_hdm",
    "group_info",
    "interchange",
    "is_commutator_word",
    "maximal",
    "precedes",
    "verbal",
    "verify",
]


def group_info(spec, words=()):
    return json.loads(_core.group_info(spec, list(words)))


def verbal(spec, word):
    return json.loads(_core.verbal(spec, word))


def maximal(spec, word):
    return json.loads(_core.maximal(spec, word))


def interchange(spec, word):
    return json.loads(_core.interchange(spec, word))


def classify_hdm(spec):
    return json.loads(_core.classify_hdm(spec))


def precedes(lower, upper, word):
    return json.loads(_core.precedes(lower, upper, word))


def atlas(max_order=24, builders=(), depth=1, primes=(), words=(), jobs=1):
    text = _core.atlas_lines(max_order, list(builders), depth, list(primes), list(words), jobs)
    return [json.loads(line) for line in text.splitlines() if line]


def verify(only=(), budget_small=False):
    return json.loads(_core.verify(list(only), budget_small))
