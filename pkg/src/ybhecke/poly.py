"""Exact sparse Laurent polynomials over Q and their fraction field.

Coefficients are arbitrary-precision rationals (`fractions.Fraction`) and a
polynomial is a map from monomials to nonzero coefficients, so all arithmetic
is exact; there is no floating point anywhere in this package.

Variables are compact strings: the indexed families ``x1, x2, ...``,
``y1, ...``, ``u1, ...`` and the two parameters ``q1``, ``q2``.  The
canonical variable order is

    q1 < q2 < u1 < u2 < ... < y1 < y2 < ... < x1 < x2 < ...

and monomials are compared in graded-lexicographic order with respect to it.
Negative exponents are allowed for the ``x`` and ``u`` families only (the
K-theory tables need 1/x_i and multiplicative spectral parameters need v/u);
``y`` and ``q`` variables stay polynomial, so a quotient such as 1/(q1+q2)
lives in :class:`RationalFunction`.

>>> p = LaurentPoly.variable("x1") - LaurentPoly.variable("y1")
>>> str(p * p)
'x1^2 - 2*x1*y1 + y1^2'
>>> str(LaurentPoly.variable("x1") / LaurentPoly.variable("x2"))
'x1*x2^-1'
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    DivisionByZero,
    ExactDivisionError,
    SubstitutionSingular,
    ZeroPolynomial,
)

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "Scalar",
    "make_var",
    "var_parts",
    "var_sort_key",
    "exact_div",
    "poly_gcd",
    "divide_by_difference",
    "rename_poly",
    "rename_rf",
    "substitute",
    "substitute_poly",
    "lowest_homogeneous_component",
    "format_poly",
    "format_rf",
]

# Canonical (ordering) rank of each family; index breaks ties inside a family.
_FAMILY_RANK = {"q": 0, "u": 2, "y": 3, "x": 4}
# Families whose variables are invertible inside LaurentPoly.
_LAURENT_FAMILIES = frozenset({"x", "u"})
# Display significance when rendering: x's first, then y, u, q.
_DISPLAY_RANK = {"x": 0, "y": 1, "u": 2, "q": 3}

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by var_sort_key
Scalar = Union[int, Fraction]


def make_var(family: str, index: int | None = None) -> str:
    """Return the variable string for a family/index pair, e.g. ("x", 3) -> "x3"."""
    if family in ("q1", "q2"):
        return family
    if family == "q":
        if index not in (1, 2):
            raise ValueError("q admits only indices 1 and 2")
        return f"q{index}"
    if family not in ("x", "y", "u") or index is None or index < 1:
        raise ValueError(f"invalid variable {family!r}/{index!r}")
    return f"{family}{index}"


def var_parts(v: str) -> tuple[str, int]:
    """Split a variable string into (family, index); q1/q2 have family 'q'."""
    fam = v[:1]
    if fam not in ("x", "y", "u", "q") or len(v) < 2 or not v[1:].isdigit():
        raise ValueError(f"unknown variable {v!r}")
    idx = int(v[1:])
    if fam == "q" and idx not in (1, 2):
        raise ValueError(f"unknown variable {v!r}")
    if fam != "q" and idx < 1:
        raise ValueError(f"unknown variable {v!r}")
    return fam, idx


def var_sort_key(v: str) -> tuple[int, int]:
    fam, idx = var_parts(v)
    return (_FAMILY_RANK[fam] if fam != "q" else idx - 1, idx)


def _display_key(v: str) -> tuple[int, int]:
    fam, idx = var_parts(v)
    return (_DISPLAY_RANK[fam], idx)


def _mono_from_dict(exps: Mapping[str, int]) -> Monomial:
    items = [(v, e) for v, e in exps.items() if e != 0]
    items.sort(key=lambda it: var_sort_key(it[0]))
    return tuple(items)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        ne = exps.get(v, 0) + e
        if ne:
            exps[v] = ne
        else:
            del exps[v]
    return _mono_from_dict(exps)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _cmp_monos(m1: Monomial, m2: Monomial) -> int:
    """Graded-lex comparison in the canonical variable order."""
    if m1 == m2:
        return 0
    d1, d2 = _mono_degree(m1), _mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = dict(m1), dict(m2)
    for v in sorted(set(e1) | set(e2), key=var_sort_key, reverse=True):
        a, b = e1.get(v, 0), e2.get(v, 0)
        if a != b:
            return -1 if a < b else 1
    return 0


def _cmp_display(m1: Monomial, m2: Monomial) -> int:
    """Like :func:`_cmp_monos`, but with x1 as the most significant variable.

    Only used for rendering, so that x1 + x2 - y1 - y2 prints in the familiar
    order; canonical decisions (denominator sign) use :func:`_cmp_monos`.
    """
    if m1 == m2:
        return 0
    d1, d2 = _mono_degree(m1), _mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1, e2 = dict(m1), dict(m2)
    for v in sorted(set(e1) | set(e2), key=_display_key):
        a, b = e1.get(v, 0), e2.get(v, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


_CANONICAL_KEY = cmp_to_key(_cmp_monos)
_DISPLAY_KEY = cmp_to_key(_cmp_display)


def _check_mono(m: Monomial) -> None:
    for v, e in m:
        fam, _ = var_parts(v)
        if not isinstance(e, int) or e == 0:
            raise ValueError(f"bad exponent {e!r} for {v}")
        if e < 0 and fam not in _LAURENT_FAMILIES:
            raise ValueError(f"negative exponent on {v}: only x/u may be inverted")


class LaurentPoly:
    """A sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                m = _mono_from_dict(dict(m)) if m else ()
                _check_mono(m)
                clean[m] = clean.get(m, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "LaurentPoly":
        p = object.__new__(cls)
        p._terms = terms
        return p

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({(): Fraction(1)})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, v: str, exp: int = 1) -> "LaurentPoly":
        m = _mono_from_dict({v: exp})
        _check_mono(m)
        return cls._raw({m: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Scalar = 1) -> "LaurentPoly":
        c = Fraction(coeff)
        if c == 0:
            return cls.zero()
        m = _mono_from_dict(exps)
        _check_mono(m)
        return cls._raw({m: c})

    # ------------------------------------------------------------------
    # views

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == {(): Fraction(1)}

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self._terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, exps: Mapping[str, int]) -> Fraction:
        return self._terms.get(_mono_from_dict(exps), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(_mono_degree(m) for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # arithmetic

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; use the term map for identity checks

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            nc = out.get(m, Fraction(0)) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly.zero()
        if other.is_constant:
            c = other.constant_value()
            return LaurentPoly._raw({m: a * c for m, a in self._terms.items()})
        if self.is_constant:
            c = self.constant_value()
            return LaurentPoly._raw({m: a * c for m, a in other._terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                nc = out.get(m, Fraction(0)) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                (m, c), = self._terms.items()
                inv = _mono_from_dict({v: -e for v, e in m})
                _check_mono(inv)
                return LaurentPoly._raw({inv: 1 / c}) ** (-n)
            raise ValueError("negative powers only for invertible monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __truediv__(self, other) -> "RationalFunction":
        return RationalFunction(self) / other

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    # ------------------------------------------------------------------
    # structure helpers

    def leading(self) -> tuple[Monomial, Fraction]:
        """Leading (monomial, coefficient) in the canonical order."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        m = max(self._terms, key=_CANONICAL_KEY)
        return m, self._terms[m]

    def min_exponents(self) -> dict[str, int]:
        """Per-variable minimum exponent across all terms (0 if absent somewhere)."""
        if not self._terms:
            return {}
        monos = [dict(m) for m in self._terms]
        out: dict[str, int] = {}
        for v in {v for m in monos for v in m}:
            mn = min(m.get(v, 0) for m in monos)
            if mn != 0:
                out[v] = mn
        return out

    def shifted(self, delta: Mapping[str, int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``delta``."""
        if not delta:
            return self
        dm = _mono_from_dict(delta)
        out = {}
        for m, c in self._terms.items():
            nm = _mono_mul(m, dm)
            _check_mono(nm)
            out[nm] = c
        return LaurentPoly._raw(out)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators / lcm of denominators."""
        if not self._terms:
            return Fraction(0)
        g = 0
        l = 1
        for c in self._terms.values():
            g = _int_gcd(g, abs(c.numerator))
            l = _int_lcm(l, c.denominator)
        return Fraction(g, l)

    def map_coefficients(self, fn) -> "LaurentPoly":
        out = {}
        for m, c in self._terms.items():
            nc = fn(c)
            if nc:
                out[m] = nc
        return LaurentPoly._raw(out)


_P_ZERO = LaurentPoly.zero()
_P_ONE = LaurentPoly.one()


# ----------------------------------------------------------------------
# exact division and gcd


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Divide ``p`` by ``d`` exactly; raise :class:`ExactDivisionError` otherwise."""
    if d.is_zero:
        raise DivisionByZero("exact division by zero polynomial")
    if p.is_zero:
        return _P_ZERO
    if d.is_constant:
        c = d.constant_value()
        return p.map_coefficients(lambda a: a / c)
    sp = p.min_exponents()
    sd = d.min_exponents()
    P = p.shifted({v: -e for v, e in sp.items()})
    D = d.shifted({v: -e for v, e in sd.items()})
    Q = _divide_ordinary(P, D)
    delta = dict(sp)
    for v, e in sd.items():
        delta[v] = delta.get(v, 0) - e
    delta = {v: e for v, e in delta.items() if e}
    for v, e in delta.items():
        fam, _ = var_parts(v)
        if e < 0 and fam not in _LAURENT_FAMILIES:
            raise ExactDivisionError("quotient would need a negative y/q exponent")
    return Q.shifted(delta)


def _divide_ordinary(P: LaurentPoly, D: LaurentPoly) -> LaurentPoly:
    lead_m, lead_c = D.leading()
    lead_e = dict(lead_m)
    rem = dict(P.terms)
    quo: dict[Monomial, Fraction] = {}
    while rem:
        m = max(rem, key=_CANONICAL_KEY)
        c = rem[m]
        exps = dict(m)
        t = {}
        for v, e in lead_e.items():
            ne = exps.get(v, 0) - e
            if ne < 0:
                raise ExactDivisionError("not divisible")
            if ne:
                t[v] = ne
            exps.pop(v, None)
        t.update(exps)
        if any(e < 0 for e in t.values()):
            raise ExactDivisionError("not divisible")
        tm = _mono_from_dict(t)
        tc = c / lead_c
        quo[tm] = quo.get(tm, Fraction(0)) + tc
        for dm, dc in D.terms.items():
            nm = _mono_mul(tm, dm)
            nc = rem.get(nm, Fraction(0)) - tc * dc
            if nc:
                rem[nm] = nc
            else:
                rem.pop(nm, None)
    return LaurentPoly._raw({m: c for m, c in quo.items() if c})


def _normal_positive(p: LaurentPoly) -> LaurentPoly:
    """Strip rational content and make the canonical leading coefficient +1-signed."""
    if p.is_zero:
        return p
    c = p.content()
    _, lc = p.leading()
    if lc < 0:
        c = -c
    return p.map_coefficients(lambda a: a / c)


def _as_univar(p: LaurentPoly, v: str) -> dict[int, LaurentPoly]:
    out: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        exps = dict(m)
        e = exps.pop(v, 0)
        rest = _mono_from_dict(exps)
        out.setdefault(e, {})[rest] = c
    return {e: LaurentPoly._raw(t) for e, t in out.items()}


def _collect_univar(A: dict[int, LaurentPoly], v: str) -> LaurentPoly:
    out: dict[Monomial, Fraction] = {}
    for e, coeff in A.items():
        for m, c in coeff.terms.items():
            nm = _mono_mul(m, _mono_from_dict({v: e}) if e else ())
            out[nm] = out.get(nm, Fraction(0)) + c
    return LaurentPoly._raw({m: c for m, c in out.items() if c})


def _prem(A: dict[int, LaurentPoly], B: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    """Pseudo-remainder of two nonzero univariate polys with poly coefficients."""
    dB = max(B)
    lB = B[dB]
    R = dict(A)
    while R and max(R) >= dB:
        dR = max(R)
        lR = R[dR]
        Rn: dict[int, LaurentPoly] = {}
        for e, c in R.items():
            if e != dR:
                Rn[e] = c * lB
        for e, c in B.items():
            if e == dB:
                continue
            e2 = e + dR - dB
            Rn[e2] = Rn.get(e2, _P_ZERO) + (-(lR * c))
        R = {e: c for e, c in Rn.items() if not c.is_zero}
    return R


def _coeff_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = _P_ZERO
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_one:
            return g
    return g


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """A gcd of two Laurent polynomials (primitive, positive leading coefficient).

    The result always divides both inputs exactly; it is used to keep fraction
    denominators small, never to decide equality.
    """
    if p.is_zero:
        return _normal_positive(q)
    if q.is_zero:
        return _normal_positive(p)
    sp = p.min_exponents()
    sq = q.min_exponents()
    common = {}
    for v in set(sp) | set(sq):
        e = min(sp.get(v, 0), sq.get(v, 0))
        if e:
            common[v] = e
    P = _normal_positive(p.shifted({v: -e for v, e in sp.items()}))
    Q = _normal_positive(q.shifted({v: -e for v, e in sq.items()}))
    G = _gcd_rec(P, Q)
    return G.shifted(common)


def _gcd_rec(P: LaurentPoly, Q: LaurentPoly) -> LaurentPoly:
    if P.is_zero:
        return _normal_positive(Q)
    if Q.is_zero:
        return _normal_positive(P)
    if P.is_constant or Q.is_constant:
        return _P_ONE
    vs = P.variables() | Q.variables()
    v = max(vs, key=var_sort_key)
    A = _as_univar(P, v)
    B = _as_univar(Q, v)
    if max(A) < max(B):
        A, B = B, A
    contA = _coeff_gcd(A.values())
    contB = _coeff_gcd(B.values())
    A = {e: exact_div(c, contA) for e, c in A.items()}
    B = {e: exact_div(c, contB) for e, c in B.items()}
    while B:
        R = _prem(A, B)
        if R:
            contR = _coeff_gcd(R.values())
            R = {e: exact_div(c, contR) for e, c in R.items()}
        A, B = B, R
    prim = _collect_univar(A, v)
    cont = _gcd_rec(contA, contB)
    return _normal_positive(prim * cont)


def divide_by_difference(p: LaurentPoly, va: str, vb: str) -> LaurentPoly:
    """Exact quotient of an antisymmetric polynomial by (va - vb).

    ``p`` must change sign under the exchange of ``va`` and ``vb`` (this is
    what makes the division exact); terms are processed in antisymmetric
    pairs, so only the half with a larger ``va``-exponent is visited.
    """
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        exps = dict(m)
        a = exps.pop(va, 0)
        b = exps.pop(vb, 0)
        if a <= b:
            continue
        for k in range(a - b):
            t = dict(exps)
            ea = b + k
            eb = a - 1 - k
            if ea:
                t[va] = ea
            if eb:
                t[vb] = eb
            tm = _mono_from_dict(t)
            nc = out.get(tm, Fraction(0)) + c
            if nc:
                out[tm] = nc
            else:
                out.pop(tm, None)
    return LaurentPoly._raw(out)


# ----------------------------------------------------------------------
# rational functions


class RationalFunction:
    """A quotient of Laurent polynomials, normalized on construction.

    Normalization strips common monomial factors (pushing invertible x/u
    monomials into the numerator), removes rational content, and scales so
    the denominator has positive leading coefficient.  Equality is decided
    by cross-multiplication, so it never depends on gcd reduction; gcds are
    only used inside ``+`` and ``*`` to keep denominators from growing.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.constant(num)
        if den is None:
            den = _P_ONE
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.constant(den)
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            self.num = _P_ZERO
            self.den = _P_ONE
            return
        a = num.min_exponents()
        b = den.min_exponents()
        shift: dict[str, int] = {}
        for v in set(a) | set(b):
            fam, _ = var_parts(v)
            if fam in _LAURENT_FAMILIES:
                c = b.get(v, 0)
            else:
                c = min(a.get(v, 0), b.get(v, 0))
            if c:
                shift[v] = -c
        if shift:
            num = num.shifted(shift)
            den = den.shifted(shift)
        s = den.content()
        _, lc = den.leading()
        if lc < 0:
            s = -s
        if s != 1:
            num = num.map_coefficients(lambda x: x / s)
            den = den.map_coefficients(lambda x: x / s)
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        return cls(num, den)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(_P_ZERO)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(_P_ONE)

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        return cls(LaurentPoly.constant(c))

    @classmethod
    def variable(cls, v: str, exp: int = 1) -> "RationalFunction":
        fam, _ = var_parts(v)
        if exp < 0 and fam not in _LAURENT_FAMILIES:
            return cls(_P_ONE, LaurentPoly.variable(v, -exp))
        return cls(LaurentPoly.variable(v, exp))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_poly(self) -> LaurentPoly:
        if not self.den.is_one:
            raise ValueError("not a polynomial")
        return self.num

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        return None

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __neg__(self) -> "RationalFunction":
        f = RationalFunction.__new__(RationalFunction)
        f.num = -self.num
        f.den = self.den
        return f

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_one:
            return RationalFunction(self.num * other.den + other.num, other.den)
        if other.den.is_one:
            return RationalFunction(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_one:
            return RationalFunction(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        db = exact_div(self.den, g)
        dd = exact_div(other.den, g)
        return RationalFunction(self.num * dd + other.num * db, self.den * dd)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero or other.num.is_zero:
            return RationalFunction.zero()
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not d.is_one:
            g = poly_gcd(a, d)
            if not g.is_one:
                a = exact_div(a, g)
                d = exact_div(d, g)
        if not b.is_one:
            g = poly_gcd(c, b)
            if not g.is_one:
                c = exact_div(c, g)
                b = exact_div(b, g)
        return RationalFunction(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return self * RationalFunction(other.den, other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.num.is_zero:
                raise DivisionByZero("inverse of zero")
            return RationalFunction(self.den, self.num) ** (-n)
        out = RationalFunction.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def simplify(self) -> "RationalFunction":
        """Fully gcd-reduced copy (optional; equality never needs it)."""
        if self.den.is_one or self.num.is_zero:
            return self
        g = poly_gcd(self.num, self.den)
        if g.is_one:
            return self
        return RationalFunction(exact_div(self.num, g), exact_div(self.den, g))

    def __str__(self) -> str:
        return format_rf(self)

    def __repr__(self) -> str:
        return f"RationalFunction({format_rf(self)!r})"


_R_ZERO = RationalFunction.zero()
_R_ONE = RationalFunction.one()


# ----------------------------------------------------------------------
# substitution


def rename_poly(p: LaurentPoly, varmap: Mapping[str, str]) -> LaurentPoly:
    """Replace variables by variables (exponents of merged targets add up)."""
    if not varmap:
        return p
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        exps: dict[str, int] = {}
        for v, e in m:
            nv = varmap.get(v, v)
            exps[nv] = exps.get(nv, 0) + e
        nm = _mono_from_dict(exps)
        _check_mono(nm)
        nc = out.get(nm, Fraction(0)) + c
        if nc:
            out[nm] = nc
        else:
            out.pop(nm, None)
    return LaurentPoly._raw(out)


def rename_rf(f: RationalFunction, varmap: Mapping[str, str]) -> RationalFunction:
    if not varmap:
        return f
    return RationalFunction(rename_poly(f.num, varmap), rename_poly(f.den, varmap))


def substitute_poly(
    p: LaurentPoly, images: Mapping[str, RationalFunction]
) -> RationalFunction:
    """Image of a polynomial under a variable -> rational-function map."""
    if not images:
        return RationalFunction(p)
    cache: dict[tuple[str, int], RationalFunction] = {}

    def power(v: str, e: int) -> RationalFunction:
        key = (v, e)
        got = cache.get(key)
        if got is not None:
            return got
        img = images.get(v)
        if img is None:
            val = RationalFunction.variable(v, e)
        else:
            if e < 0 and img.is_zero:
                raise SubstitutionSingular(f"substituting 0 for inverted {v}")
            val = img ** e
        cache[key] = val
        return val

    total = _R_ZERO
    for m, c in p.terms.items():
        term = RationalFunction.constant(c)
        for v, e in m:
            term = term * power(v, e)
        total = total + term
    return total


def substitute(
    f: RationalFunction, images: Mapping[str, RationalFunction]
) -> RationalFunction:
    """Image of ``f`` under the field homomorphism induced by ``images``.

    Raises :class:`SubstitutionSingular` when the denominator goes to zero.
    """
    num = substitute_poly(f.num, images)
    den = substitute_poly(f.den, images)
    if den.is_zero:
        raise SubstitutionSingular("denominator vanishes under substitution")
    return num / den


def lowest_homogeneous_component(p: LaurentPoly, vars: Iterable[str]) -> LaurentPoly:
    """Sum of the terms of minimal total degree in the given variables."""
    if p.is_zero:
        raise ZeroPolynomial("zero polynomial has no lowest component")
    vs = set(vars)
    best: int | None = None
    groups: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        d = 0
        for v, e in m:
            if v in vs:
                if e < 0:
                    raise ValueError("lowest component needs nonnegative exponents")
                d += e
        groups.setdefault(d, {})[m] = c
        if best is None or d < best:
            best = d
    return LaurentPoly._raw(groups[best])


# ----------------------------------------------------------------------
# text rendering (the parsing side lives in serialize.py)


def _format_mono(m: Monomial, latex: bool) -> str:
    parts = []
    for v, e in sorted(m, key=lambda it: _display_key(it[0])):
        fam, idx = var_parts(v)
        if latex:
            name = f"{fam}_{idx}" if fam != "q" else f"q_{idx}"
            if e == 1:
                parts.append(name)
            else:
                parts.append(f"{name}^{{{e}}}")
        else:
            parts.append(v if e == 1 else f"{v}^{e}")
    return ("" if latex else "*").join(parts)


def format_poly(p: LaurentPoly, latex: bool = False) -> str:
    """Deterministic text for a polynomial; parses back via the CLI grammar."""
    if p.is_zero:
        return "0"
    monos = sorted(p.terms, key=_DISPLAY_KEY, reverse=True)
    pieces: list[str] = []
    for i, m in enumerate(monos):
        c = p.terms[m]
        neg = c < 0
        mag = -c if neg else c
        if not m:
            body = _format_scalar(mag, latex)
        elif mag == 1:
            body = _format_mono(m, latex)
        else:
            sep = "" if latex else "*"
            body = f"{_format_scalar(mag, latex)}{sep}{_format_mono(m, latex)}"
        if i == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"{' - ' if neg else ' + '}{body}" if not latex else
                          f"{'-' if neg else '+'}{body}")
    return "".join(pieces)


def _format_scalar(c: Fraction, latex: bool) -> str:
    if latex and c.denominator != 1:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def format_rf(f: RationalFunction, latex: bool = False) -> str:
    if f.den.is_one:
        return format_poly(f.num, latex)
    if latex:
        return f"\\frac{{{format_poly(f.num, True)}}}{{{format_poly(f.den, True)}}}"
    return f"({format_poly(f.num)})/({format_poly(f.den)})"
