"""Shared fixtures: the worked three-polynomial system, the benchmark suite,
and a session-scoped cache so expensive engine runs happen once."""

from __future__ import annotations

import pytest

from siggb import (
    buchberger,
    gen_cyclic,
    gen_eco,
    gen_katsura,
    homogenize,
    parse_system,
    sig_gb,
)

WALKTHROUGH_TEXT = """\
vars: x, y, z
char: 32003
y*z + 2
x*y + 10668*x*z + 21336
x*z^2 - 6*x + 2*z
"""


@pytest.fixture(scope="session")
def walkthrough():
    return parse_system(WALKTHROUGH_TEXT, name="walkthrough")


def suite_systems():
    """The desk-scale suite: cyclic/katsura/eco 4..6, plain and homogenized."""
    out = []
    for gen in (gen_cyclic, gen_katsura, gen_eco):
        for n in (4, 5, 6):
            spec = gen(n)
            out.append(spec)
            out.append(homogenize(spec))
    return out


class RunCache:
    """Lazily computed, session-wide results: traced variant runs keyed by
    (system name, variant), classical bases keyed by system name."""

    def __init__(self):
        self.specs = {spec.name: spec for spec in suite_systems()}
        self._runs = {}
        self._oracles = {}

    @property
    def names(self):
        return list(self.specs)

    def spec(self, name):
        return self.specs[name]

    def run(self, name, variant):
        key = (name, variant)
        if key not in self._runs:
            trace = []
            basis, stats = sig_gb(self.specs[name].generators, variant,
                                  trace=trace)
            self._runs[key] = (basis, stats, trace)
        return self._runs[key]

    def basis(self, name, variant):
        return self.run(name, variant)[0]

    def stats(self, name, variant):
        return self.run(name, variant)[1]

    def trace(self, name, variant):
        return self.run(name, variant)[2]

    def completed(self):
        """All runs performed so far, as (system, variant, basis, stats,
        trace) tuples."""
        for (name, variant), (basis, stats, trace) in self._runs.items():
            yield name, variant, basis, stats, trace

    def oracle(self, name):
        if name not in self._oracles:
            self._oracles[name] = buchberger(self.specs[name].generators)
        return self._oracles[name]


@pytest.fixture(scope="session")
def runs():
    return RunCache()
