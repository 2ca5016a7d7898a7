"""Benchmark system generators, homogenization, and the input-file format.

The classical cyclic-n, katsura-n and eco-n families are generated from
their standard formulas over a prime field (default characteristic 32003).
``parse_system``/``format_system`` read and write a small line-oriented text
format::

    vars: x,y,z
    char: 32003
    y*z + 2
    x*y + 10668*x*z + 21336
    x*z^2 - 6*x + 2*z

The ``*`` between a coefficient and a variable is optional, ``^`` denotes
positive integer powers, and parentheses are not supported.
"""

from __future__ import annotations

import random
import re
import warnings
from dataclasses import dataclass

from .ring import PolyRing, PrimeField

DEFAULT_CHAR = 32003


@dataclass(frozen=True)
class SystemSpec:
    """A named generator system: what the engine and the benchmarks run on."""

    name: str
    generators: tuple
    ring: PolyRing
    homogenized: bool = False

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a system needs at least one generator")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _var_ring(prefix, n, char, start=1):
    names = [f"{prefix}{i}" for i in range(start, start + n)]
    return PolyRing(names, PrimeField(char))


def gen_cyclic(n, char=DEFAULT_CHAR):
    """Cyclic-n: f_k = sum over i of the k-fold products of cyclically
    consecutive variables (k = 1..n-1), plus x1*...*xn - 1."""
    if n < 2:
        raise ValueError("cyclic-n needs n >= 2")
    ring = _var_ring("x", n, char)
    gens = []
    for k in range(1, n):
        terms = []
        for i in range(1, n + 1):
            mono = [0] * n
            for j in range(k):
                mono[(i + j - 1) % n] += 1
            terms.append((tuple(mono), 1))
        gens.append(ring.from_terms(terms))
    gens.append(ring.from_terms([(tuple([1] * n), 1), (ring.zero_mono, -1)]))
    return SystemSpec(f"cyclic-{n}", tuple(gens), ring)


def gen_katsura(n, char=DEFAULT_CHAR):
    """Katsura-n over u0..un with the index folding u_{-l} = u_l and
    u_l = 0 for |l| > n: the quadratic equations
    sum_l u_l*u_{m-l} - u_m for m = 0..n-1 plus the linear sum constraint
    u0 + 2*(u1 + ... + un) - 1."""
    if n < 2:
        raise ValueError("katsura-n needs n >= 2")
    ring = _var_ring("u", n + 1, char, start=0)
    nv = n + 1
    gens = []
    for m in range(n):
        terms = []
        for l in range(-n, n + 1):
            a, b = abs(l), abs(m - l)
            if a > n or b > n:
                continue
            mono = [0] * nv
            mono[a] += 1
            mono[b] += 1
            terms.append((tuple(mono), 1))
        mono = [0] * nv
        mono[m] = 1
        terms.append((tuple(mono), -1))
        gens.append(ring.from_terms(terms))
    terms = []
    for l in range(-n, n + 1):
        mono = [0] * nv
        mono[abs(l)] = 1
        terms.append((tuple(mono), 1))
    terms.append((ring.zero_mono, -1))
    gens.append(ring.from_terms(terms))
    return SystemSpec(f"katsura-{n}", tuple(gens), ring)


def gen_eco(n, char=DEFAULT_CHAR):
    """Eco-n: (x_k + sum_{i=1}^{n-k-1} x_i*x_{i+k})*x_n - k for k = 1..n-1,
    plus x_1 + ... + x_{n-1} + 1."""
    if n < 2:
        raise ValueError("eco-n needs n >= 2")
    ring = _var_ring("x", n, char)
    gens = []
    for k in range(1, n):
        terms = []
        mono = [0] * n
        mono[k - 1] += 1
        mono[n - 1] += 1
        terms.append((tuple(mono), 1))
        for i in range(1, n - k):
            mono = [0] * n
            mono[i - 1] += 1
            mono[i + k - 1] += 1
            mono[n - 1] += 1
            terms.append((tuple(mono), 1))
        terms.append((ring.zero_mono, -k))
        gens.append(ring.from_terms(terms))
    terms = []
    for i in range(n - 1):
        mono = [0] * n
        mono[i] = 1
        terms.append((tuple(mono), 1))
    terms.append((ring.zero_mono, 1))
    gens.append(ring.from_terms(terms))
    return SystemSpec(f"eco-{n}", tuple(gens), ring)


def gen_random(n, deg, count, seed, char=DEFAULT_CHAR):
    """A reproducible random system: ``count`` sparse polynomials in ``n``
    variables of degree at most ``deg``, drawn from ``random.Random(seed)``."""
    if n < 1 or deg < 1 or count < 1:
        raise ValueError("random system needs n, deg, count >= 1")
    ring = _var_ring("x", n, char)
    rng = random.Random(seed)

    pool = [tuple([0] * n)]
    frontier = pool[:]
    for _ in range(deg):
        nxt = []
        for m in frontier:
            for v in range(n):
                m2 = list(m)
                m2[v] += 1
                nxt.append(tuple(m2))
        frontier = sorted(set(nxt))
        pool.extend(frontier)
    pool = sorted(set(pool))

    gens = []
    for _ in range(count):
        k = rng.randint(2, min(6, len(pool)))
        chosen = rng.sample(pool, k)
        terms = [(m, rng.randrange(1, char)) for m in chosen]
        f = ring.from_terms(terms)
        if f.is_zero:
            f = ring.from_terms([(pool[-1], 1)])
        gens.append(f)
    name = f"random-n{n}d{deg}c{count}s{seed}"
    return SystemSpec(name, tuple(gens), ring)


def _fresh_var_name(names):
    if "h" not in names:
        return "h"
    i = 0
    while f"h{i}" in names:
        i += 1
    return f"h{i}"


def homogenize(spec):
    """Pad every term of every generator with powers of a fresh variable so
    each generator becomes homogeneous; the new variable is appended last,
    i.e. smallest in the degrevlex order."""
    ring = spec.ring
    h = _fresh_var_name(ring.names)
    new_ring = PolyRing(list(ring.names) + [h], ring.field)
    gens = []
    for f in spec.generators:
        if f.is_zero:
            gens.append(new_ring.zero)
            continue
        d = max(sum(m) for m, _ in f.terms)
        terms = [(m + (d - sum(m),), c) for m, c in f.terms]
        gens.append(new_ring.from_terms(terms))
    return SystemSpec(f"{spec.name}-h", tuple(gens), new_ring, homogenized=True)


class ParseError(ValueError):
    """Input-format error with 1-based line and column position."""

    def __init__(self, line, col, message):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([*^+\-])|(\S)")


def _tokenize(text, lineno):
    tokens = []
    for match in _TOKEN.finditer(text):
        col = match.start() + 1
        num, ident, op, bad = match.groups()
        if bad is not None:
            raise ParseError(lineno, col, f"unexpected character {bad!r}")
        if num is not None:
            tokens.append(("int", int(num), col))
        elif ident is not None:
            tokens.append(("var", ident, col))
        else:
            tokens.append((op, op, col))
    return tokens


def _parse_poly(text, lineno, ring):
    tokens = _tokenize(text, lineno)
    end_col = len(text) + 1
    var_index = {name: i for i, name in enumerate(ring.names)}
    nv = ring.nvars
    terms = []
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, value, col = tokens[i]
        if kind in ("+", "-"):
            if first and kind == "+":
                raise ParseError(lineno, col, "polynomial cannot start with '+'")
            sign = -1 if kind == "-" else 1
            i += 1
        elif not first:
            raise ParseError(lineno, col, "expected '+' or '-' between terms")
        if i >= len(tokens):
            raise ParseError(lineno, end_col, "expected a term after the operator")

        coeff = None
        mono = [0] * nv
        saw_factor = False
        kind, value, col = tokens[i]
        if kind == "int":
            coeff = value
            i += 1
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "var":
                    where = tokens[i][2] if i < len(tokens) else end_col
                    raise ParseError(lineno, where, "expected a variable after '*'")
        while i < len(tokens) and tokens[i][0] == "var":
            name = tokens[i][1]
            if name not in var_index:
                raise ParseError(lineno, tokens[i][2], f"unknown variable {name!r}")
            i += 1
            exp = 1
            if i < len(tokens) and tokens[i][0] == "^":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int" or tokens[i][1] < 1:
                    where = tokens[i][2] if i < len(tokens) else end_col
                    raise ParseError(lineno, where, "expected a positive integer exponent")
                exp = tokens[i][1]
                i += 1
            mono[var_index[name]] += exp
            saw_factor = True
            if i < len(tokens) and tokens[i][0] == "*":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "var":
                    where = tokens[i][2] if i < len(tokens) else end_col
                    raise ParseError(lineno, where, "expected a variable after '*'")
        if coeff is None and not saw_factor:
            raise ParseError(lineno, col, "expected a coefficient or a variable")
        c = coeff if coeff is not None else 1
        terms.append((tuple(mono), sign * c))
        first = False
    return ring.from_terms(terms)


def _header(lines, start, key):
    for lineno in range(start, len(lines) + 1):
        raw = lines[lineno - 1]
        if not raw.strip():
            continue
        head, sep, rest = raw.partition(":")
        if not sep or head.strip().lower() != key:
            raise ParseError(lineno, 1, f"expected '{key}:' header")
        return lineno, rest.strip()
    raise ParseError(len(lines) + 1, 1, f"expected '{key}:' header")


def parse_system(text, name="file"):
    """Parse the line-oriented system format; raises ParseError with line
    and column on malformed input, warns on generators that are zero mod p."""
    lines = text.splitlines()
    vars_line, vars_text = _header(lines, 1, "vars")
    names = [part.strip() for part in vars_text.split(",")]
    try:
        char_line, char_text = _header(lines, vars_line + 1, "char")
        char = int(char_text)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(char_line, 1, f"characteristic is not an integer: {char_text!r}") from None
    try:
        ring = PolyRing(names, PrimeField(char))
    except ValueError as exc:
        raise ParseError(vars_line, 1, str(exc)) from None

    gens = []
    for lineno in range(char_line + 1, len(lines) + 1):
        raw = lines[lineno - 1]
        if not raw.strip():
            continue
        f = _parse_poly(raw, lineno, ring)
        if f.is_zero:
            warnings.warn(f"line {lineno}: polynomial is zero modulo {char}")
        gens.append(f)
    if not gens:
        raise ParseError(len(lines) + 1, 1, "no polynomials in input")
    return SystemSpec(name, tuple(gens), ring)


def format_system(spec):
    """Render a system in the input-file format so that parsing the result
    reproduces the system exactly."""
    lines = [f"vars: {', '.join(spec.ring.names)}", f"char: {spec.ring.field.p}"]
    lines.extend(str(f) for f in spec.generators)
    return "\n".join(lines) + "\n"
