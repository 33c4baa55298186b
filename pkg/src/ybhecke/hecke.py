"""Abstract Hecke algebras of type A and their Yang-Baxter bases.

An algebra is generated by T_1..T_{n-1} subject to the braid relations and a
quadratic relation T_i^2 = a T_i + b; the supported parameter choices are

    sigma:   a = 0,      b = 1        (group algebra)
    partial: a = 0,      b = 0        (nil-Coxeter)
    s:       a = 0,      b = 1
    pi:      a = 1,      b = 0
    pibar:   a = -1,     b = 0
    T:       a = q1+q2,  b = -q1*q2   (generic)

Elements are finitely supported maps from permutations to rational functions
in the spectral parameters u_i (and q1, q2).  Yang-Baxter elements are built
from the factors 1 + c(u, v) T_j by the recursion

    Y_mu(u) = Y_nu(u) * Y_j(u_{nu(j)}, u_{nu(j+1)})     for mu = nu s_j, longer,

with c as returned by :func:`factor_coefficient`; the same element also
arises by reading the Rothe diagram of mu (:func:`yb_element_rothe`).

The bilinear form pairs h1, h2 into the coefficient of T_omega in
h1 * phi(h2), where phi is the anti-automorphism T_mu -> T_{mu^{-1}},
u_i -> u_{n+1-i}.  The Yang-Baxter basis is orthogonal for it:
<Y_mu, Y_nu> = Delta(u^{omega mu}) delta_{nu, omega mu} with Delta as in
:func:`delta`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    AlgebraMismatch,
    DegenerateSpectrum,
    IndexOutOfRange,
    ZeroSpectral,
)
from .operators import apply_word
from .permutations import Permutation, all_permutations
from .poly import RationalFunction, rename_rf

__all__ = [
    "AlgebraSpec",
    "HeckeElement",
    "algebra",
    "basis_element",
    "unit",
    "factor_coefficient",
    "elementary_factor",
    "symbolic_spectral",
    "permuted_spectral",
    "yb_element",
    "yb_basis",
    "yb_element_rothe",
    "phi",
    "pairing",
    "delta",
    "gram_matrix",
    "expand_in_yb",
    "apply_to_polynomial",
]

_R = RationalFunction
_FACTOR_FAMILIES = ("sigma", "partial", "pibar", "T")


@dataclass(frozen=True)
class AlgebraSpec:
    """Family tag, rank, quadratic parameters and spectral mode."""

    family: str
    n: int
    a: RationalFunction
    b: RationalFunction
    multiplicative: bool

    def __repr__(self) -> str:
        return f"AlgebraSpec({self.family!r}, n={self.n})"


def algebra(family: str, n: int) -> AlgebraSpec:
    q1 = _R.variable("q1")
    q2 = _R.variable("q2")
    table = {
        "sigma": (_R.zero(), _R.one(), False),
        "partial": (_R.zero(), _R.zero(), False),
        "s": (_R.zero(), _R.one(), False),
        "pi": (_R.one(), _R.zero(), True),
        "pibar": (-_R.one(), _R.zero(), True),
        "T": (q1 + q2, -(q1 * q2), True),
    }
    if family not in table:
        raise ValueError(f"unknown algebra family {family!r}")
    a, b, mult = table[family]
    return AlgebraSpec(family=family, n=n, a=a, b=b, multiplicative=mult)


class HeckeElement:
    """A finitely supported linear combination of basis elements T_mu."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: AlgebraSpec, coeffs: Mapping[Permutation, RationalFunction]):
        self.alg = alg
        self.coeffs = {mu: c for mu, c in coeffs.items() if not c.is_zero}

    # ------------------------------------------------------------------

    def coefficient(self, mu: Permutation) -> RationalFunction:
        return self.coeffs.get(mu, _R.zero())

    def support(self) -> list[Permutation]:
        return sorted(self.coeffs, key=Permutation.sort_key)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.alg != other.alg or set(self.coeffs) != set(other.coeffs):
            return False
        return all(c == other.coeffs[mu] for mu, c in self.coeffs.items())

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{mu}: {c}" for mu, c in sorted(
            self.coeffs.items(), key=lambda it: it[0].sort_key()))
        return f"HeckeElement[{self.alg.family}]({{{body}}})"

    # ------------------------------------------------------------------

    def _check(self, other: "HeckeElement") -> None:
        if self.alg != other.alg:
            raise AlgebraMismatch(f"{self.alg} vs {other.alg}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            nc = out.get(mu)
            out[mu] = c if nc is None else nc + c
        return HeckeElement(self.alg, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            nc = out.get(mu)
            out[mu] = -c if nc is None else nc - c
        return HeckeElement(self.alg, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.alg, {mu: -c for mu, c in self.coeffs.items()})

    def scale(self, c) -> "HeckeElement":
        c = _coerce_rf(c)
        if c.is_zero:
            return HeckeElement(self.alg, {})
        return HeckeElement(self.alg, {mu: x * c for mu, x in self.coeffs.items()})

    def times_generator(self, j: int) -> "HeckeElement":
        """Right multiplication by T_j in the T_mu basis."""
        n = self.alg.n
        if not 1 <= j <= n - 1:
            raise IndexOutOfRange(f"generator index {j} outside 1..{n - 1}")
        a, b = self.alg.a, self.alg.b
        out: dict[Permutation, RationalFunction] = {}
        for mu, c in self.coeffs.items():
            msj = mu.times_simple(j)
            if mu.window[j - 1] < mu.window[j]:  # length goes up
                _acc(out, msj, c)
            else:
                if not a.is_zero:
                    _acc(out, mu, c * a)
                if not b.is_zero:
                    _acc(out, msj, c * b)
        return HeckeElement(self.alg, out)

    def generator_times(self, j: int) -> "HeckeElement":
        """Left multiplication by T_j in the T_mu basis."""
        n = self.alg.n
        if not 1 <= j <= n - 1:
            raise IndexOutOfRange(f"generator index {j} outside 1..{n - 1}")
        a, b = self.alg.a, self.alg.b
        out: dict[Permutation, RationalFunction] = {}
        for mu, c in self.coeffs.items():
            sjm = mu.simple_times(j)
            if mu.window.index(j) < mu.window.index(j + 1):  # length goes up
                _acc(out, sjm, c)
            else:
                if not a.is_zero:
                    _acc(out, mu, c * a)
                if not b.is_zero:
                    _acc(out, sjm, c * b)
        return HeckeElement(self.alg, out)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            self._check(other)
            total = HeckeElement(self.alg, {})
            for nu, c in other.coeffs.items():
                h = self
                for j in nu.reduced_word():
                    h = h.times_generator(j)
                total = total + h.scale(c)
            return total
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything here
        return self.scale(other)


def _acc(out: dict, mu: Permutation, c: RationalFunction) -> None:
    old = out.get(mu)
    out[mu] = c if old is None else old + c


def _coerce_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    return RationalFunction(c)


def unit(alg: AlgebraSpec) -> HeckeElement:
    return HeckeElement(alg, {Permutation.identity(alg.n): _R.one()})


def basis_element(alg: AlgebraSpec, mu: Permutation) -> HeckeElement:
    return HeckeElement(alg, {mu: _R.one()})


# ----------------------------------------------------------------------
# spectral parameters and elementary factors


def symbolic_spectral(n: int) -> list[RationalFunction]:
    return [_R.variable(f"u{i}") for i in range(1, n + 1)]


def permuted_spectral(
    u: Sequence[RationalFunction], mu: Permutation
) -> list[RationalFunction]:
    """The permuted tuple u^mu = (u_{mu(1)}, ..., u_{mu(n)})."""
    return [u[mu(i) - 1] for i in range(1, mu.n + 1)]


def factor_coefficient(
    alg: AlgebraSpec, u: RationalFunction, v: RationalFunction
) -> RationalFunction:
    """The coefficient c(u, v) of T_j in the elementary factor 1 + c T_j."""
    if alg.family in ("sigma", "partial"):
        return v - u
    if alg.family == "pibar":
        if u.is_zero:
            raise ZeroSpectral("pibar factors need an invertible first parameter")
        return 1 - v / u
    if alg.family == "T":
        if u.is_zero:
            raise ZeroSpectral("T factors need an invertible first parameter")
        theta = _R.variable("q1") + _R.variable("q2")
        return (v / u - 1) / theta
    raise ValueError(
        f"no elementary Yang-Baxter factor for family {alg.family!r}; "
        f"supported: {_FACTOR_FAMILIES}"
    )


def elementary_factor(
    alg: AlgebraSpec, j: int, u: RationalFunction, v: RationalFunction
) -> HeckeElement:
    """The element 1 + c(u, v) T_j."""
    if not 1 <= j <= alg.n - 1:
        raise IndexOutOfRange(f"generator index {j} outside 1..{alg.n - 1}")
    c = factor_coefficient(alg, u, v)
    n = alg.n
    coeffs = {Permutation.identity(n): _R.one()}
    if not c.is_zero:
        coeffs[Permutation.simple(n, j)] = c
    return HeckeElement(alg, coeffs)


def _check_spectral(alg: AlgebraSpec, u: Sequence[RationalFunction]) -> None:
    if len(u) != alg.n:
        raise ValueError(f"need {alg.n} spectral parameters, got {len(u)}")
    if alg.multiplicative and any(x.is_zero for x in u):
        raise ZeroSpectral("multiplicative families need nonzero parameters")


def yb_element(
    alg: AlgebraSpec,
    mu: Permutation,
    u: Sequence[RationalFunction] | None = None,
) -> HeckeElement:
    """The Yang-Baxter element Y_mu(u), built along the canonical reduced word."""
    if u is None:
        u = symbolic_spectral(alg.n)
    _check_spectral(alg, u)
    h = unit(alg)
    nu = Permutation.identity(alg.n)
    for j in mu.reduced_word():
        factor = elementary_factor(alg, j, u[nu(j) - 1], u[nu(j + 1) - 1])
        h = h * factor
        nu = nu.times_simple(j)
    return h


def yb_basis(
    alg: AlgebraSpec, u: Sequence[RationalFunction] | None = None
) -> dict[Permutation, HeckeElement]:
    """All Y_mu at once, sharing the recursion along the weak order."""
    if u is None:
        u = symbolic_spectral(alg.n)
    _check_spectral(alg, u)
    perms = all_permutations(alg.n)
    out: dict[Permutation, HeckeElement] = {perms[0]: unit(alg)}
    for mu in perms[1:]:
        j = next(iter(mu.descents()))
        nu = mu.times_simple(j)
        factor = elementary_factor(alg, j, u[nu(j) - 1], u[nu(j + 1) - 1])
        out[mu] = out[nu] * factor
    return out


def yb_element_rothe(
    alg: AlgebraSpec,
    mu: Permutation,
    u: Sequence[RationalFunction] | None = None,
) -> HeckeElement:
    """Y_mu(u) as the reading of the Rothe diagram of mu.

    The box produced by the inversion (i, j) carries the elementary factor
    Y_k(u_{mu(j)}, u_{mu(i)}) at the box's generator index k, and the
    occidental reading (top row first, left to right) multiplies out to the
    same element as the recursion.
    """
    from .permutations import rothe_diagram

    if u is None:
        u = symbolic_spectral(alg.n)
    _check_spectral(alg, u)
    h = unit(alg)
    for box in rothe_diagram(mu).boxes:
        lo, hi = u[mu(box.j) - 1], u[mu(box.i) - 1]
        h = h * elementary_factor(alg, box.generator, lo, hi)
    return h


# ----------------------------------------------------------------------
# the bilinear form


def phi(h: HeckeElement) -> HeckeElement:
    """The anti-automorphism T_mu -> T_{mu^{-1}}, u_i -> u_{n+1-i}."""
    n = h.alg.n
    rev = {f"u{i}": f"u{n + 1 - i}" for i in range(1, n + 1) if i != n + 1 - i}
    out: dict[Permutation, RationalFunction] = {}
    for mu, c in h.coeffs.items():
        out[mu.inverse()] = rename_rf(c, rev)
    return HeckeElement(h.alg, out)


def pairing(h1: HeckeElement, h2: HeckeElement) -> RationalFunction:
    """The coefficient of T_omega in h1 * phi(h2)."""
    if h1.alg != h2.alg:
        raise AlgebraMismatch(f"{h1.alg} vs {h2.alg}")
    omega = Permutation.longest(h1.alg.n)
    return (h1 * phi(h2)).coefficient(omega)


def delta(
    alg: AlgebraSpec, u: Sequence[RationalFunction] | None = None
) -> RationalFunction:
    """The normalizing factor prod_{i<j} c(u_i, u_j) of the orthogonality law.

    For the generic family this is prod_{i<j} (u_j/u_i - 1)/(q1+q2); the
    additive families use their own elementary coefficients.
    """
    if u is None:
        u = symbolic_spectral(alg.n)
    _check_spectral(alg, u)
    total = _R.one()
    for i in range(alg.n):
        for j in range(i + 1, alg.n):
            total = total * factor_coefficient(alg, u[i], u[j])
    return total


def gram_matrix(
    alg: AlgebraSpec, u: Sequence[RationalFunction] | None = None
) -> dict[tuple[Permutation, Permutation], RationalFunction]:
    """All pairings <Y_mu, Y_nu> at once.

    The naive route multiplies n!^2 pairs of elements; instead, for each nu
    the products T_kappa * phi(Y_nu) are built once along the left weak
    order, and every <Y_mu, Y_nu> becomes a short linear combination of
    their T_omega coefficients.
    """
    if u is None:
        u = symbolic_spectral(alg.n)
    ys = yb_basis(alg, u)
    perms = all_permutations(alg.n)
    omega = Permutation.longest(alg.n)
    out: dict[tuple[Permutation, Permutation], RationalFunction] = {}
    for nu in perms:
        g = phi(ys[nu])
        left: dict[Permutation, HeckeElement] = {perms[0]: g}
        for kappa in perms[1:]:
            i = next(
                i
                for i in range(1, alg.n)
                if kappa.window.index(i) > kappa.window.index(i + 1)
            )
            shorter = kappa.simple_times(i)
            left[kappa] = left[shorter].generator_times(i)
        w = {kappa: h.coefficient(omega) for kappa, h in left.items()}
        for mu in perms:
            total = _R.zero()
            for kappa, c in ys[mu].coeffs.items():
                wk = w[kappa]
                if not wk.is_zero:
                    total = total + c * wk
            out[(mu, nu)] = total
    return out


def expand_in_yb(
    h: HeckeElement, u: Sequence[RationalFunction] | None = None
) -> dict[Permutation, RationalFunction]:
    """Coefficients c_mu with h = sum_mu c_mu Y_mu(u).

    Each coefficient is <h, Y_{omega mu}> / Delta(u^{mu omega}), matching the
    orthogonality law <Y_mu, Y_nu> = Delta(u^{mu omega}) delta_{nu, omega mu};
    the spectral parameters must keep every Delta nonzero.
    """
    alg = h.alg
    if u is None:
        u = symbolic_spectral(alg.n)
    ys = yb_basis(alg, u)
    omega = Permutation.longest(alg.n)
    out: dict[Permutation, RationalFunction] = {}
    for mu in all_permutations(alg.n):
        d = delta(alg, permuted_spectral(u, mu * omega))
        if d.is_zero:
            raise DegenerateSpectrum(f"Delta(u^({mu}*omega)) = 0")
        c = pairing(h, ys[omega * mu]) / d
        if not c.is_zero:
            out[mu] = c
    return out


def apply_to_polynomial(
    h: HeckeElement, f: RationalFunction, params=None
) -> RationalFunction:
    """Realize ``h`` through the operator family and apply it to ``f``.

    Basis elements act along their reduced words with the first generator
    applied first, making the polynomial ring a right module: applying
    h1 * h2 equals applying h1, then h2.  Coefficients must not involve the
    x variables.
    """
    total = _R.zero()
    for mu, c in h.coeffs.items():
        image = apply_word(h.alg.family, mu.reduced_word(), f, h.alg.n, params=params)
        total = total + c * image
    return total
