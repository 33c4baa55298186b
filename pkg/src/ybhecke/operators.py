"""The six operator families acting on polynomials in the x variables.

These realize the abstract algebras faithfully and serve as the ground truth
for every identity proved at the level of Hecke elements:

* ``sigma_i`` exchanges x_i and x_{i+1},
* ``partial_i`` is the divided difference (f - sigma_i f)/(x_i - x_{i+1}),
* ``s_i = sigma_i + partial_i``,
* ``pi_i f = partial_i(x_i f)`` (isobaric divided difference),
* ``pibar_i = pi_i - 1``,
* ``t_i = -(q1+q2) pibar_i + q2 sigma_i``.

Words act with the first listed generator applied first (a right action of
the algebra on the polynomial ring); ``apply_inverse_word`` composes in the
classical operator order instead.
"""

from __future__ import annotations

import random
from typing import Sequence

from .errors import IndexOutOfRange
from .permutations import Permutation
from .poly import (
    LaurentPoly,
    RationalFunction,
    divide_by_difference,
    rename_rf,
)
from .report import CheckReport

__all__ = [
    "FAMILIES",
    "apply_generator",
    "apply_word",
    "apply_inverse_word",
    "perm_action",
    "check_relations",
    "random_probe",
]

FAMILIES = ("sigma", "partial", "s", "pi", "pibar", "T")

_Q1 = RationalFunction.variable("q1")
_Q2 = RationalFunction.variable("q2")


def _swap(f: RationalFunction, i: int, fam: str) -> RationalFunction:
    a, b = f"{fam}{i}", f"{fam}{i + 1}"
    return rename_rf(f, {a: b, b: a})


def _divided_difference(f: RationalFunction, i: int, fam: str) -> RationalFunction:
    a, b = f"{fam}{i}", f"{fam}{i + 1}"
    swapped = _swap(f, i, fam)
    den = f.den
    if _swap(RationalFunction(den), i, fam).num == den:
        # denominator is symmetric, so the division is exact on the numerator
        diff = f.num - swapped.num if f.den == swapped.den else None
        if diff is not None:
            return RationalFunction(divide_by_difference(diff, a, b), den)
    num = f - swapped
    return num / (LaurentPoly.variable(a) - LaurentPoly.variable(b))


def apply_generator(
    family: str,
    i: int,
    f: RationalFunction,
    n: int,
    params: tuple[RationalFunction, RationalFunction] | None = None,
    var_family: str = "x",
) -> RationalFunction:
    """Apply the i-th generator of the given family to ``f``.

    ``params`` supplies (q1, q2) for the T family and defaults to the formal
    parameters; ``var_family`` selects which indexed variables the operators
    touch (x by default).
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{n - 1}")
    fam = var_family
    if family == "sigma":
        return _swap(f, i, fam)
    if family == "partial":
        return _divided_difference(f, i, fam)
    if family == "s":
        return _swap(f, i, fam) + _divided_difference(f, i, fam)
    if family == "pi":
        xi = RationalFunction.variable(f"{fam}{i}")
        return _divided_difference(xi * f, i, fam)
    if family == "pibar":
        xi = RationalFunction.variable(f"{fam}{i}")
        return _divided_difference(xi * f, i, fam) - f
    if family == "T":
        q1, q2 = params if params is not None else (_Q1, _Q2)
        xi = RationalFunction.variable(f"{fam}{i}")
        pibar = _divided_difference(xi * f, i, fam) - f
        return -(q1 + q2) * pibar + q2 * _swap(f, i, fam)
    raise ValueError(f"unknown operator family {family!r}")


def apply_word(
    family: str,
    word: Sequence[int],
    f: RationalFunction,
    n: int,
    params=None,
    var_family: str = "x",
) -> RationalFunction:
    """Apply a generator word with the first letter acting first."""
    for i in word:
        f = apply_generator(family, i, f, n, params=params, var_family=var_family)
    return f


def apply_inverse_word(
    family: str,
    mu: Permutation,
    f: RationalFunction,
    params=None,
    var_family: str = "x",
) -> RationalFunction:
    """Apply the classical operator D_mu (last letter of the word acts first).

    With word conventions as in :func:`apply_word`, this is the composition
    used by the defining recursions of the Schubert and Grothendieck tables:
    D_{mu s_j} = D_j after D_mu whenever the length increases.
    """
    word = tuple(reversed(mu.reduced_word()))
    return apply_word(family, word, f, mu.n, params=params, var_family=var_family)


def perm_action(
    mu: Permutation, f: RationalFunction, var_family: str = "x"
) -> RationalFunction:
    """The substitution action x_i -> x_{mu(i)}; a left group action."""
    fam = var_family
    mapping = {
        f"{fam}{i}": f"{fam}{mu(i)}" for i in range(1, mu.n + 1) if mu(i) != i
    }
    return rename_rf(f, mapping)


def random_probe(
    rng: random.Random,
    n: int,
    max_deg: int = 4,
    max_terms: int = 6,
    var_family: str = "x",
) -> RationalFunction:
    """A random integer polynomial probe in n variables (degree <= max_deg)."""
    p = LaurentPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = {}
        budget = rng.randint(0, max_deg)
        for i in range(1, n + 1):
            if budget <= 0:
                break
            e = rng.randint(0, budget)
            if e:
                exps[f"{var_family}{i}"] = e
                budget -= e
        coeff = rng.choice([c for c in range(-9, 10) if c])
        p = p + LaurentPoly.monomial(exps, coeff)
    return RationalFunction(p)


def check_relations(
    family: str, n: int, probes: int = 10, seed: int = 0, params=None
) -> CheckReport:
    """Probe the braid, commutation and quadratic relations of one family.

    Every relation is evaluated on random integer polynomials; any violation
    is reported with a witness (it would indicate an implementation bug, not
    a property of the family).
    """
    report = CheckReport(name=f"relations[{family}, n={n}]", seed=seed)
    rng = random.Random(seed)
    quad = {
        "sigma": (0, 1),
        "partial": (0, 0),
        "s": (0, 1),
        "pi": (1, 0),
        "pibar": (-1, 0),
    }
    for _ in range(probes):
        f = random_probe(rng, n)

        def op(word, g=f):
            return apply_word(family, word, g, n, params=params)

        for i in range(1, n - 1):
            lhs = op((i, i + 1, i))
            rhs = op((i + 1, i, i + 1))
            report.record(lhs == rhs, f"braid({i},{i + 1}) on {f}")
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                report.record(
                    op((i, j)) == op((j, i)), f"commute({i},{j}) on {f}"
                )
        for i in range(1, n):
            ti = op((i,))
            tii = apply_word(family, (i,), ti, n, params=params)
            if family == "T":
                q1, q2 = params if params is not None else (_Q1, _Q2)
                ok = tii == (q1 + q2) * ti - q1 * q2 * f
            else:
                a, b = quad[family]
                ok = tii == a * ti + b * f
            report.record(ok, f"quadratic({i}) on {f}")
    return report
