"""Dirichlet characters mod n as exponent vectors on canonical generators.

The unit group mod n splits over the prime powers dividing n.  Each odd
p**e block is cyclic with the smallest primitive root as generator; the
2**e block contributes no generator (e = 1), the single generator 3
(e = 2), or the pair (-1, 5) with orders (2, 2**(e-2)) for e >= 3.  A
character is one exponent per generator, and its value at a unit w is
e(sum_i t_i * a_i / m_i) where the a_i are componentwise discrete logs of
w.  Logs come from per-component lookup tables built on first use; all
phase arithmetic is exact rational, so equality tests (orthogonality,
conductor search) never depend on floating-point tolerances.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .arith import divisors, factorize, lcm_all, primitive_root
from .errors import DomainError

_LOG_TABLE_LIMIT = 10**7


class UnitGroupComponent:
    """Generators and discrete logs for the units of one prime power p**e."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.modulus = p**e
        gens = primitive_root(p, e)
        self.generators = tuple(g for g, _ in gens)
        self.orders = tuple(m for _, m in gens)
        self._logs: tuple[np.ndarray, ...] | None = None

    def log_tables(self) -> tuple[np.ndarray, ...]:
        """Per-generator exponent of every residue mod p**e; -1 on non-units.

        Idempotent build, safe to race: concurrent callers compute identical
        tables and the final assignment is atomic.
        """
        if self._logs is None:
            pe = self.modulus
            if pe > _LOG_TABLE_LIMIT:
                raise DomainError(
                    f"character evaluation supports prime-power components up to {_LOG_TABLE_LIMIT}"
                )
            tabs = [np.full(pe, -1, np.int64) for _ in self.generators]
            if self.p == 2 and self.e >= 3:
                x = 1
                for t in range(self.orders[1]):
                    tabs[0][x] = 0
                    tabs[1][x] = t
                    tabs[0][pe - x] = 1
                    tabs[1][pe - x] = t
                    x = x * 5 % pe
            elif self.generators:
                g = self.generators[0]
                x = 1
                for a in range(self.orders[0]):
                    tabs[0][x] = a
                    x = x * g % pe
            self._logs = tuple(tabs)
        return self._logs


class CharacterGroup:
    """The full dual of (Z/nZ)*: exactly phi(n) characters, enumerated
    lexicographically over exponent vectors."""

    def __init__(self, n: int):
        if n < 1:
            raise DomainError(f"need modulus >= 1, got {n}")
        self.n = n
        self.components = tuple(UnitGroupComponent(p, e) for p, e in factorize(n).factors) if n > 1 else ()
        self.orders = tuple(m for c in self.components for m in c.orders)
        self.total_order = math.prod(self.orders)  # = phi(n)
        self.exponent = lcm_all(self.orders)
        self._log_matrix: np.ndarray | None = None
        self._unit_mask: np.ndarray | None = None

    def log_vector(self, w: int) -> tuple[int, ...] | None:
        """Discrete logs of w on every generator, or None when gcd(w, n) > 1."""
        out = []
        for comp in self.components:
            r = w % comp.modulus
            if r % comp.p == 0:  # non-unit; matters when the block has no generators
                return None
            for tab in comp.log_tables():
                a = int(tab[r])
                if a < 0:  # pragma: no cover - p-divisibility already caught it
                    return None
                out.append(a)
        return tuple(out)

    def log_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """(logs, unit_mask): logs has one row per generator over all w in [0, n)."""
        if self._log_matrix is None:
            w = np.arange(self.n, dtype=np.int64)
            rows = []
            mask = np.ones(self.n, bool)
            for comp in self.components:
                r = w % comp.modulus
                mask &= r % comp.p != 0
                for tab in comp.log_tables():
                    a = tab[r]
                    rows.append(a)
            logs = np.vstack(rows) if rows else np.zeros((0, self.n), np.int64)
            logs[:, ~mask] = 0
            self._log_matrix = logs
            self._unit_mask = mask
        return self._log_matrix, self._unit_mask

    def character(self, exponents) -> "DirichletCharacter":
        exps = tuple(int(t) % m for t, m in zip(exponents, self.orders, strict=True))
        return DirichletCharacter(self, exps)

    @property
    def trivial(self) -> "DirichletCharacter":
        return DirichletCharacter(self, (0,) * len(self.orders))

    def characters(self):
        """All phi(n) characters in lexicographic exponent order."""
        for exps in product(*(range(m) for m in self.orders)):
            yield DirichletCharacter(self, exps)

    def character_by_index(self, i: int) -> "DirichletCharacter":
        if not 0 <= i < self.total_order:
            raise DomainError(f"character index {i} out of range [0, {self.total_order})")
        exps = []
        for m in reversed(self.orders):
            exps.append(i % m)
            i //= m
        return DirichletCharacter(self, tuple(reversed(exps)))

    def value_matrix(self) -> np.ndarray:
        """phi(n) x n table of every character's values (suite-scale moduli only)."""
        return np.vstack([chi.value_table() for chi in self.characters()])


def character_group(n: int) -> CharacterGroup:
    if n < 2:
        raise DomainError(f"need modulus >= 2, got {n}")
    return CharacterGroup(n)


@dataclass(frozen=True)
class DirichletCharacter:
    group: CharacterGroup = field(repr=False)
    exponents: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.group.n

    @property
    def index(self) -> int:
        i = 0
        for t, m in zip(self.exponents, self.group.orders):
            i = i * m + t
        return i

    @property
    def is_trivial(self) -> bool:
        return all(t == 0 for t in self.exponents)

    @property
    def order(self) -> int:
        return lcm_all(m // math.gcd(t, m) for t, m in zip(self.exponents, self.group.orders))

    def phase(self, w: int) -> Fraction | None:
        """Exact phase of the value at w (value = e(phase)), None on non-units."""
        logs = self.group.log_vector(w % self.group.n)
        if logs is None:
            return None
        f = Fraction(0)
        for t, a, m in zip(self.exponents, logs, self.group.orders):
            f += Fraction(t * a, m)
        return f % 1

    def __call__(self, w: int) -> complex:
        ph = self.phase(w)
        if ph is None:
            return 0j
        return cmath.exp(2j * cmath.pi * float(ph))

    def __pow__(self, alpha: int) -> "DirichletCharacter":
        if alpha < 0:
            raise DomainError("character powers take non-negative exponents")
        return DirichletCharacter(
            self.group,
            tuple(t * alpha % m for t, m in zip(self.exponents, self.group.orders)),
        )

    def value_table(self) -> np.ndarray:
        """Values at every w in [0, n), vectorized through the group log matrix."""
        logs, mask = self.group.log_matrix()
        M = self.group.exponent
        num = np.zeros(self.group.n, np.int64)
        for t, m, row in zip(self.exponents, self.group.orders, logs):
            num += (t * (M // m)) * row
        num %= M
        roots = np.exp(2j * np.pi * np.arange(M) / M)
        vals = roots[num]
        vals[~mask] = 0
        return vals

    def conductor(self) -> tuple[int, "DirichletCharacter"]:
        """(q, primitive character mod q inducing this one).

        q is found by testing each divisor of n in increasing order: the
        character factors through mod q exactly when it is 1 on every unit
        w = 1 (mod q).  For the trivial character this returns q = 1 and
        the character of the trivial group.
        """
        n = self.group.n
        for q in divisors(n):
            if self._factors_through(q):
                sub = CharacterGroup(q)
                exps = []
                for comp in sub.components:
                    for g, m in zip(comp.generators, comp.orders):
                        ph = self.phase(self._unit_lift(g, comp.modulus, q))
                        t = ph * m
                        if t.denominator != 1:  # pragma: no cover - internal consistency
                            raise ArithmeticError("conductor phase not a root of unity of the right order")
                        exps.append(int(t) % m)
                return q, DirichletCharacter(sub, tuple(exps))
        raise ArithmeticError("no conductor found")  # pragma: no cover

    def _factors_through(self, q: int) -> bool:
        """True when the value at w depends only on w mod q, i.e. the
        character is 1 on every unit congruent to 1 mod q."""
        n = self.group.n
        step = q if q > 1 else 1
        for w in range(1, n, step):
            if math.gcd(w, n) == 1 and self.phase(w) != 0:
                return False
        return True

    def _unit_lift(self, target: int, comp_modulus: int, q: int) -> int:
        """A residue coprime to n that is congruent to `target` mod the
        component and 1 mod the rest of q."""
        n = self.group.n
        # CRT inside q: target on one component, 1 elsewhere
        rest = q // comp_modulus
        r = _crt(target, comp_modulus, 1, rest)
        for w in range(r if r > 0 else q, n + q, q):
            if math.gcd(w, n) == 1:
                return w
        raise ArithmeticError("no coprime lift found")  # pragma: no cover

    @property
    def is_primitive(self) -> bool:
        return self.conductor()[0] == self.group.n


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    if m1 == 1:
        return a2 % m2 if m2 > 1 else 0
    if m2 == 1:
        return a1 % m1
    inv = pow(m1, -1, m2)
    return (a1 + (a2 - a1) * inv % m2 * m1) % (m1 * m2)


def evaluate(chi: DirichletCharacter, w: int) -> complex:
    """Spec operation `evaluate`."""
    return chi(w)


def power(chi: DirichletCharacter, alpha: int) -> DirichletCharacter:
    """Spec operation `power`."""
    return chi**alpha


def conductor(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    """Spec operation `conductor`."""
    return chi.conductor()
