"""Finite groupoids, quotients, abelianization and convolution algebras.

Groupoids are plain dicts in the GroupoidDocument JSON layout:
``schema_version``, ``elements``, ``units``, ``src``, ``rng``, ``inv``, ``comp``.
"""

import json as _json

from . import _core
from ._core import SCHEMA_VERSION, DocumentError, GroupoidError

__all__ = [
    "SCHEMA_VERSION",
    "DocumentError",
    "GroupoidError",
    "validate",
    "quotient",
    "abelianize",
    "abelianization_dim",
    "dual_bundle",
    "characters",
    "gelfand_transform",
    "check",
    "invariant_factors",
    "random_groupoid",
    "random_abelian_bundle",
    "group",
    "group_bundle",
    "trivial_groupoid",
    "pair_groupoid",
    "klein_cross",
    "s3_a3_bundle",
    "library_group_names",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def validate(doc):
    """List of axiom violations; empty when ``doc`` is a groupoid."""
    return _json.loads(_core.validate(_text(doc)))


def quotient(doc, subgroupoid):
    """G/H for H given by arrow labels; raises GroupoidError when H is not normal."""
    return _json.loads(_core.quotient(_text(doc), list(subgroupoid)))


def abelianize(doc):
    return _json.loads(_core.abelianize(_text(doc)))


def abelianization_dim(doc):
    return _core.abelianization_dim(_text(doc))


def dual_bundle(doc):
    return _json.loads(_core.dual_bundle(_text(doc)))


def characters(doc):
    return _json.loads(_core.characters(_text(doc)))


def gelfand_transform(doc):
    return _json.loads(_core.gelfand_transform(_text(doc)))


def check(doc, max_exact_arrows=24):
    return _json.loads(_core.check(_text(doc), max_exact_arrows))


def invariant_factors(labels, table):
    """Invariant factors of an abelian group given by a row-major table."""
    return _core.invariant_factors(list(labels), [int(x) for x in table])


def random_groupoid(seed, budget=20):
    return _json.loads(_core.random_groupoid(seed, budget))


def random_abelian_bundle(seed, max_points=8):
    return _json.loads(_core.random_abelian_bundle(seed, max_points))


def group(name):
    return _json.loads(_core.group(name))


def group_bundle(fibers):
    """``fibers`` maps point names to library group names, e.g. {"p": "S3"}."""
    return _json.loads(_core.group_bundle(list(fibers.items())))


def trivial_groupoid(n):
    return _json.loads(_core.trivial_groupoid(n))


def pair_groupoid(n):
    return _json.loads(_core.pair_groupoid(n))


def klein_cross():
    return _json.loads(_core.klein_cross())


def s3_a3_bundle():
    return _json.loads(_core.s3_a3_bundle())


def library_group_names():
    return _core.library_group_names()
