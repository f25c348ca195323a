"""Oriented graded posets, molecules, Gray products and presented theories.

Complexes are passed either as fixture names ("O2", "U2,1", "FROB") or as dicts in the
JSON schema used by the ogp command-line tool. Results come back as plain Python data.
"""

import json

try:
    from . import _ogp
except ImportError:  # in-tree build: the extension sits next to the package
    import _ogp

ParseError = _ogp.ParseError
MoleculeError = _ogp.MoleculeError
TheoryError = _ogp.TheoryError

__all__ = [
    "ParseError", "MoleculeError", "TheoryError",
    "fixture_names", "fixture", "validate", "boundary", "recognize", "paste", "atom", "compos",
    "gray", "interpret", "maxd_dot", "export_dot", "export_svg", "tensor", "smash",
    "perm_decompose", "inversion_count",
]


def _arg(x):
    return x if isinstance(x, str) else json.dumps(x)


def fixture_names():
    return _ogp.fixture_names()


def fixture(name):
    return json.loads(_ogp.fixture(name))


def validate(complex):
    return json.loads(_ogp.validate(_arg(complex)))


def boundary(complex, n=-1, sign="both", ids=()):
    """Element ids of the n-boundary of the closure of ids (everything by default)."""
    return _ogp.boundary(_arg(complex), n, sign, list(ids))


def recognize(complex, ids=()):
    return json.loads(_ogp.recognize(_arg(complex), list(ids)))


def paste(left, right, k):
    return json.loads(_ogp.paste(_arg(left), _arg(right), k))


def atom(input, output):
    return json.loads(_ogp.atom(_arg(input), _arg(output)))


def compos(complex):
    return json.loads(_ogp.compos(_arg(complex)))


def gray(left, right):
    return json.loads(_ogp.gray(_arg(left), _arg(right)))


def interpret(complex, order=()):
    return json.loads(_ogp.interpret(_arg(complex), list(order)))


def maxd_dot(complex, n=-1):
    return _ogp.maxd_dot(_arg(complex), n)


def export_dot(complex):
    return _ogp.export_dot(_arg(complex))


def export_svg(complex):
    return _ogp.export_svg(_arg(complex))


def tensor(left, right, prop=False):
    return json.loads(_ogp.tensor(_arg(left), _arg(right), prop))


def smash(left, right):
    return json.loads(_ogp.smash(_arg(left), _arg(right)))


def perm_decompose(images):
    return _ogp.perm_decompose(list(images))


def inversion_count(images):
    return _ogp.inversion_count(list(images))
