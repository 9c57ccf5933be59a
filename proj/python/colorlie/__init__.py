"""Exact computer algebra for twisted enveloping algebras of color Lie algebras.

The heavy lifting happens in the compiled extension; this wrapper parses the
JSON reports into plain dictionaries.
"""

import json as _json

from ._core import Instance as _Instance
from ._core import parse_scalar

__all__ = ["Instance", "parse_scalar", "load"]


class Instance:
    """A parsed problem instance (algebra, cocycles, modules)."""

    def __init__(self, json_text):
        self._inner = _Instance(json_text)

    @classmethod
    def from_path(cls, path):
        with open(path, "r", encoding="utf-8") as f:
            return cls(f.read())

    def run(self, command, **options):
        """Dispatch a subcommand; returns (exit_code, report_dict).

        Flag names use underscores in place of dashes, e.g. max_degree=6.
        """
        opts = {k.replace("_", "-"): str(v) for k, v in options.items()}
        code, report = self._inner.run(command, opts)
        return code, _json.loads(report)

    def check(self):
        return self.run("check")

    def overlaps(self):
        return self.run("overlaps")

    def nf(self, word, **options):
        return self.run("nf", word=word, **options)

    def mul(self, lhs, rhs, **options):
        return self.run("mul", lhs=lhs, rhs=rhs, **options)

    def dims(self, max_degree=6):
        return self.run("dims", max_degree=max_degree)

    def h2(self):
        return self.run("h2")

    def cohomologous(self, w1="omega", w2="zero"):
        return self.run("cohomologous", w1=w1, w2=w2)

    def iso(self, w1="omega", w2="zero", max_degree=4):
        return self.run("iso", w1=w1, w2=w2, max_degree=max_degree)

    def cohomology(self, module="trivial", n_max=4, degree="identity"):
        return self.run("cohomology", module=module, n_max=n_max, degree=degree)

    def resolution_check(self, n_max=4, deg_max=5):
        return self.run("resolution-check", n_max=n_max, deg_max=deg_max)

    def hochschild(self, n=0, truncations="1,2,3,4"):
        return self.run("hochschild", n=n, truncations=truncations)

    def hopf_check(self, max_degree=4):
        return self.run("hopf-check", max_degree=max_degree)

    def canonical(self):
        return self._inner.canonical()


def load(path):
    return Instance.from_path(path)
