"""Modular symbols on the Bruhat-Tits tree of an elliptic function field.

>>> t = Tree("q=3;a=[0,0,0,1,2]")
>>> t.classify("{/1/0,/1/1}")
's(1:1->2)'
"""

import json

from ._core import DomainError, run_cli, snf
from ._core import Tree as _Tree

__all__ = ["Tree", "DomainError", "snf", "run_cli"]


class Tree(_Tree):
    """The labelled tree T of one curve, given as 'q=<p>;a=[a1,a2,a3,a4,a6]'."""

    def curve_info(self):
        return json.loads(self._curve_info())

    def reduce(self, formal_sum):
        """Certificate, per-stage metric and verification status of a balanced sum."""
        return json.loads(self._reduce(formal_sum))

    def verify(self, formal_sum, certificate):
        if not isinstance(certificate, str):
            certificate = json.dumps(certificate)
        return self._verify(formal_sum, certificate)

    def interactions(self, formal_sum):
        return json.loads(self._interactions(formal_sum))

    def presentation(self, scope="all", jobs=1):
        return json.loads(self._presentation(scope, jobs))
