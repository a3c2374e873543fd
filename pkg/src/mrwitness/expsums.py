"""Exponential sums over witness classes, units, and power-residue sets.

All sums are of the shape sum of e(k*w/n) with e(x) = exp(2*pi*i*x), taken
over structured residue sets: a witness class, the units (Ramanujan sum),
a character-twisted full range (Gauss sum), or the solution set of
w**alpha = b mod n (the cancellation sum).  Wherever a closed form or a
reduction exists, it is computed alongside a term-by-term brute-force sum
and the two are compared, never assumed equal.

Each accumulated sum carries an error budget of modulus * 2**-50, a
deliberately generous cover for pairwise-summation rounding; identity
residuals are asserted against budgets rather than ad-hoc tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import witness as _witness
from ._scan import pow_all_numpy
from .arith import divisors, factorize, mobius
from .characters import CharacterGroup, DirichletCharacter
from .errors import DomainError
from .witness import WitnessClass, classify_all, mr_decompose

MAX_FREQUENCY = 10**6  # |k| beyond this is outside the supported desk scale

BUDGET_SCALE = 2.0**-50


@dataclass(frozen=True)
class ComplexSum:
    real: float
    imag: float
    term_count: int
    error_budget: float

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    def magnitude(self) -> float:
        return math.hypot(self.real, self.imag)

    def scaled(self, factor: float) -> "ComplexSum":
        return ComplexSum(self.real * factor, self.imag * factor, self.term_count,
                          self.error_budget * abs(factor))


def _csum(z: complex, count: int, modulus: int) -> ComplexSum:
    return ComplexSum(float(z.real), float(z.imag), int(count), max(modulus, 1) * BUDGET_SCALE)


@lru_cache(maxsize=8)
def _root_table(n: int) -> np.ndarray:
    """e(m/n) for m in [0, n)."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def _check_k(n: int, k: int) -> int:
    if k == 0:
        raise DomainError("frequency k must be nonzero")
    if abs(k) > MAX_FREQUENCY:
        raise DomainError(f"|k| is limited to {MAX_FREQUENCY}")
    return k % n


def _phase_sum(residues: np.ndarray, k: int, n: int) -> complex:
    if len(residues) == 0:
        return 0j
    return complex(_root_table(n)[(k % n) * residues % n].sum())


_SELECTOR_ALIASES = {
    "witness": (WitnessClass.WITNESS,),
    "nonwitness": (WitnessClass.NON_COPRIME, WitnessClass.DTH_ROOT, WitnessClass.MINUS_ONE),
    "non-coprime": (WitnessClass.NON_COPRIME,),
    "dth-root": (WitnessClass.DTH_ROOT,),
    "minus-one": (WitnessClass.MINUS_ONE,),
}


def weyl_sum(n: int, k: int, selector: WitnessClass | str) -> ComplexSum:
    """Sum of e(k*w/n) over the residues of [0, n) matching the selector.

    Selector is a WitnessClass or one of 'witness', 'nonwitness',
    'non-coprime', 'dth-root', 'minus-one'.
    """
    _check_k(n, k)
    if isinstance(selector, WitnessClass):
        classes = (selector,)
    else:
        try:
            classes = _SELECTOR_ALIASES[selector]
        except KeyError:
            raise DomainError(f"unknown selector {selector!r}") from None
    scan = classify_all(n)
    idx = np.concatenate([scan.members(c) for c in classes]) if classes else np.array([], np.int64)
    return _csum(_phase_sum(idx, k, n), len(idx), n)


@dataclass(frozen=True)
class RamanujanSum:
    """Closed-form vs brute-force sum of e(k*w/n) over the units mod n.

    closed is the integer sum over s | gcd(n, k) of s * mu(n / s); brute is
    the term-by-term unit sum; complement negates brute and equals the sum
    over residues sharing a factor with n whenever n does not divide k.
    """

    n: int
    k: int
    closed: int
    brute: ComplexSum
    complement: ComplexSum


def ramanujan(n: int, k: int) -> RamanujanSum:
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    g = math.gcd(n, k)
    closed = sum(s * mobius(n // s) for s in divisors(g))
    if n == 1:
        brute = _csum(1 + 0j, 1, 1)
        return RamanujanSum(1, k, closed, brute, _csum(0j, 0, 1))
    w = np.arange(n, dtype=np.int64)
    units = w[np.gcd(w, n) == 1]
    z = _phase_sum(units, k, n)
    brute = _csum(z, len(units), n)
    return RamanujanSum(n, k, closed, brute, _csum(-z, n - len(units), n))


def gauss_sum_brute(chi: DirichletCharacter, k: int) -> ComplexSum:
    """Term-by-term sum of chi(w) * e(k*w/n) over all w in [0, n)."""
    n = chi.modulus
    vals = chi.value_table()
    if n == 1:
        return _csum(complex(vals[0]), 1, 1)
    z = complex((vals * _root_table(n)[(k % n) * np.arange(n, dtype=np.int64) % n]).sum())
    return _csum(z, n, n)


@dataclass(frozen=True)
class GaussReduction:
    """The conductor-based evaluation of a Gauss sum, with its reality check.

    path is 'primitive' (conductor equals the modulus; value is the direct
    sum), 'vanishing' (conductor q < n, l = n/q does not divide k; claimed
    value 0), or 'reduced' (l divides k; claimed value l * tau(chi1, k/l)
    with chi1 the inducing primitive character mod q).  The claim is always
    compared against the brute-force sum; `agrees_with_brute` reports the
    outcome and is never assumed.
    """

    modulus: int
    k: int
    conductor: int
    path: str
    value: ComplexSum
    brute: ComplexSum
    difference: float
    agrees_with_brute: bool

    TOLERANCE = 1e-6


def gauss_sum_reduced(chi: DirichletCharacter, k: int) -> GaussReduction:
    n = chi.modulus
    brute = gauss_sum_brute(chi, k)
    q, chi1 = chi.conductor()
    if q == n:
        path = "primitive"
        value = brute
    else:
        length = n // q
        if k % length != 0:
            path = "vanishing"
            value = _csum(0j, 0, n)
        else:
            path = "reduced"
            value = gauss_sum_brute(chi1, k // length).scaled(length)
    diff = abs(value.value - brute.value)
    return GaussReduction(n, k, q, path, value, brute, diff, diff < GaussReduction.TOLERANCE)


@dataclass(frozen=True)
class CancellationSum:
    """Sum of e(k*w/n) over the units solving w**alpha = b mod n."""

    n: int
    alpha: int
    b: int
    k: int
    total: ComplexSum
    solution_count: int
    sqrt_n_ratio: float
    solutions: np.ndarray


def cancellation_sum(n: int, alpha: int, b: int, k: int) -> CancellationSum:
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if alpha < 1:
        raise DomainError(f"need alpha >= 1, got {alpha}")
    if math.gcd(b, n) != 1:
        raise DomainError(f"b = {b} is not a unit mod {n}")
    _check_k(n, k)
    if n >= _witness._BATCH_LIMIT:
        raise DomainError(f"solution enumeration supports n < 2**31, got {n}")
    sols = np.nonzero(pow_all_numpy(n, alpha) == b % n)[0]
    z = _phase_sum(sols, k, n)
    total = _csum(z, len(sols), n)
    return CancellationSum(n, alpha, b, k, total, len(sols), total.magnitude() / math.sqrt(n), sols)


@dataclass(frozen=True)
class DualCancellation:
    """Direct enumeration vs character-orthogonality evaluation of the same sum.

    The orthogonality route averages chi(b^-1) * tau(chi^alpha, k) over all
    characters mod n; it must agree with the direct route to 1e-6.
    """

    direct: CancellationSum
    via_characters: ComplexSum
    difference: float
    agrees: bool

    TOLERANCE = 1e-6


def cancellation_sum_dual(n: int, alpha: int, b: int, k: int) -> DualCancellation:
    direct = cancellation_sum(n, alpha, b, k)
    group = CharacterGroup(n)
    phi = group.total_order
    roots = _root_table(n)
    ek = roots[(k % n) * np.arange(n, dtype=np.int64) % n]
    taus = np.empty(phi, np.complex128)
    chars = list(group.characters())
    for i, chi in enumerate(chars):
        taus[i] = (chi.value_table() * ek).sum()
    binv = pow(b, -1, n)
    acc = 0j
    for chi in chars:
        acc += chi(binv) * taus[(chi**alpha).index]
    z = complex(acc / phi)
    via = _csum(z, n, n)
    diff = float(abs(z - direct.total.value))
    return DualCancellation(direct, via, diff, diff < DualCancellation.TOLERANCE)


@dataclass(frozen=True)
class DecompositionReport:
    """Every class sum for one (n, k), with the two identity residuals.

    witness_sum and nonwitness_sum come from the classification scan.
    shared_factor_sum is the negated Ramanujan closed form; dth_root_sum
    and minus_one_sum come from power-residue solution sets, the latter
    attributed to the least stage hitting -1 (stage sets are checked
    disjoint; duplicates are counted, never silently merged).
    residual_total is |witness_sum + nonwitness_sum| and
    residual_partition is |nonwitness_sum - (the three class sums)|.
    """

    n: int
    k: int
    witness_sum: ComplexSum
    nonwitness_sum: ComplexSum
    shared_factor_sum: ComplexSum
    dth_root_sum: ComplexSum
    minus_one_sum: ComplexSum
    per_stage_sums: tuple[ComplexSum, ...]
    stage_duplicates: int
    residual_total: float
    residual_partition: float


def decomposition_report(n: int, k: int) -> DecompositionReport:
    return decomposition_reports(n, [k])[0]


def decomposition_reports(n: int, ks) -> list[DecompositionReport]:
    """Reports for several frequencies sharing one classification scan."""
    dec = mr_decompose(n)
    scan = classify_all(n)
    # solution-set route, independent of the classifier's sieve
    powd = pow_all_numpy(n, dec.d)
    root_solutions = np.nonzero(powd == 1)[0]
    stage_sets: list[np.ndarray] = []
    seen = np.zeros(n, bool)
    duplicates = 0
    x = powd
    for j in range(dec.s):
        sols = np.nonzero(x == n - 1)[0]
        dup = seen[sols]
        duplicates += int(dup.sum())
        stage_sets.append(sols[~dup])
        seen[sols] = True
        if j + 1 < dec.s:
            x = x * x % n
    witnesses = scan.witnesses
    nonwitnesses = np.nonzero(scan.codes != _witness.CLASS_TO_CODE[WitnessClass.WITNESS])[0]
    noncoprime_count = scan.counts.non_coprime

    out = []
    for k in ks:
        kr = _check_k(n, k)
        if kr == 0:
            raise DomainError(f"k = {k} is divisible by n = {n}; the cancellation identity needs n to not divide k")
        s_wit = _csum(_phase_sum(witnesses, k, n), len(witnesses), n)
        s_non = _csum(_phase_sum(nonwitnesses, k, n), len(nonwitnesses), n)
        closed = ramanujan_closed(n, k)
        s1 = _csum(complex(-closed, 0.0), noncoprime_count, n)
        s2 = _csum(_phase_sum(root_solutions, k, n), len(root_solutions), n)
        stage_sums = tuple(
            _csum(_phase_sum(sols, k, n), len(sols), n) for sols in stage_sets
        )
        z3 = sum((cs.value for cs in stage_sums), 0j)
        s3 = _csum(z3, sum(cs.term_count for cs in stage_sums), n)
        residual_total = abs(s_wit.value + s_non.value)
        residual_partition = abs(s_non.value - (s1.value + s2.value + s3.value))
        out.append(
            DecompositionReport(
                n=n,
                k=k,
                witness_sum=s_wit,
                nonwitness_sum=s_non,
                shared_factor_sum=s1,
                dth_root_sum=s2,
                minus_one_sum=s3,
                per_stage_sums=stage_sums,
                stage_duplicates=duplicates,
                residual_total=residual_total,
                residual_partition=residual_partition,
            )
        )
    return out


def ramanujan_closed(n: int, k: int) -> int:
    """Integer value of the unit sum, sum over s | gcd(n, k) of s * mu(n/s)."""
    g = math.gcd(n, k)
    return sum(s * mobius(n // s) for s in divisors(g))


def sigma_bound(n: int, k: int) -> int:
    """Divisor-sum envelope sigma(gcd(n, k)) dominating |ramanujan_closed|."""
    g = math.gcd(n, k)
    total = 1
    for p, e in factorize(g).factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total
