"""Divisor families on the space of linear series and their slopes.

With r, s >= 1 the parameterization g = (r+1)(s+1), d = r(s+2) runs
through Brill-Noether triples with rho = 0.  Three degeneracy-locus
families are assembled here as tautological combinations (p_a, p_b,
p_c, p_lam), pushed forward, and reduced to slopes:

* Gieseker-Petri: the locus where multiplication of sections of the
  series with sections of its Serre dual fails to be an isomorphism;
  class (r+1)/2 (-a + b) + (d+1-g) c - r lambda.

* Hypersurface: series whose image lies on a degree-k hypersurface;
  class (k^2/2) a - (k/2) b - C(r+k, k-1) c + lambda, defined when the
  two section spaces match up: C(r+k, k) = kd - g + 1.

* Syzygy: series failing the i-th Green property, with r tied to s by
  r = (i+2)s + 2(i+1); the four coefficients are binomial expressions
  in (r, i) recorded in :func:`syzygy_combo`.

The slope of a pushforward a·lambda - b0·delta_0 - ... on the
irreducible-nodal locus is a/b0; only the lambda and delta_0
coefficients enter, which is justified by the vanishing of the psi
coefficient for every family here.

Closed-form slope polynomials exist as oracles for the Gieseker-Petri
family (:func:`gp_slope_closed`) and the syzygy family
(:func:`syzygy_slope_closed`).  No closed form is tabulated for
hypersurface slopes with k >= 3: there the pipeline value stands alone.
(For k = 2 the hypersurface condition with r = 2s+2 is the 0-th syzygy
condition, so that oracle applies.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .numeric import binomial, format_rational
from .tautpush import (
    DivisorClass,
    GrdParams,
    ParameterError,
    TautCombo,
    push_combo,
    rho,
)

__all__ = [
    "FamilyParams",
    "SlopeReport",
    "SlopeUndefinedError",
    "family_combo",
    "gp_combo",
    "gp_slope_closed",
    "hypersurface_combo",
    "secant_plane_validate",
    "slope",
    "slope_bound",
    "slope_report",
    "syzygy_combo",
    "syzygy_slope_closed",
]

GP = "gp"
HYPERSURFACE = "hypersurface"
SYZYGY = "syzygy"


def _family_grd(r: int, s: int) -> Tuple[int, int]:
    """g = (r+1)(s+1), d = r(s+2); rho vanishes automatically."""
    g = (r + 1) * (s + 1)
    d = r * (s + 2)
    assert rho(g, r, d) == 0
    return g, d


def gp_combo(r: int, s: int) -> TautCombo:
    """Gieseker-Petri class (r+1)/2 (-a+b) + (d+1-g) c - r lambda."""
    if r < 1 or s < 1:
        raise ParameterError(f"Gieseker-Petri family needs r, s >= 1; got r={r}, s={s}")
    g, d = _family_grd(r, s)
    half = Fraction(r + 1, 2)
    return TautCombo.of(-half, half, d + 1 - g, -r)


def hypersurface_combo(r: int, s: int, k: int) -> TautCombo:
    """Degree-k hypersurface class (k^2/2) a - (k/2) b - C(r+k,k-1) c + lambda.

    Defined only when the source and target of the restriction map have
    equal rank: C(r+k, k) = kd - g + 1.
    """
    if r < 1 or s < 1 or k < 1:
        raise ParameterError(
            f"hypersurface family needs r, s, k >= 1; got r={r}, s={s}, k={k}"
        )
    g, d = _family_grd(r, s)
    lhs = binomial(r + k, k)
    rhs = k * d - g + 1
    if lhs != rhs:
        raise ParameterError(
            f"hypersurface rank balance fails at (r={r}, s={s}, k={k}): "
            f"C(r+k,k) = {lhs} but kd - g + 1 = {rhs}"
        )
    return TautCombo.of(Fraction(k * k, 2), Fraction(-k, 2), -binomial(r + k, k - 1), 1)


def syzygy_combo(i: int, s: int) -> TautCombo:
    """Class of the locus failing the i-th Green property, at
    r = (i+2)s + 2(i+1).

    All four coefficients are binomial expressions; the zero convention
    C(n, k<0) = 0 makes them total in i (at i = 0 only the leading terms
    survive and the combo collapses to (2, -1, -(r+2), 1))."""
    if i < 0 or s < 0:
        raise ParameterError(f"syzygy family needs i, s >= 0; got i={i}, s={s}")
    r = (i + 2) * s + 2 * (i + 1)
    g, d = _family_grd(r, s)
    p_a = (
        2 * binomial(r, i)
        - 2 * binomial(r - 1, i - 1)
        + Fraction(binomial(r - 2, i - 2), 2)
        - Fraction(binomial(r - 2, i - 1), 2)
    )
    p_b = -binomial(r, i) + Fraction(binomial(r - 1, i - 1), 2)
    p_c = (
        -(r + 2) * binomial(r, i)
        + (2 * d + 1 - g) * binomial(r - 1, i - 1)
        - d * binomial(r - 2, i - 2)
    )
    return TautCombo.of(p_a, p_b, p_c, binomial(r, i))


class SlopeUndefinedError(ValueError):
    """Raised when a class has no slope on the irreducible-nodal locus;
    carries the offending lambda and delta_0 coefficients."""

    def __init__(self, lam: Fraction, delta0: Fraction):
        self.lam = lam
        self.delta0 = delta0
        super().__init__(
            f"slope undefined: need nonzero lambda and delta_0 coefficients of "
            f"opposite sign, got lambda = {lam}, delta_0 = {delta0}"
        )


def slope(dc: DivisorClass) -> Fraction:
    """Slope -lambda/delta_0 of a class whose lambda and delta_0
    coefficients are nonzero and of opposite sign."""
    if dc.lam == 0 or dc.delta0 == 0 or (dc.lam > 0) == (dc.delta0 > 0):
        raise SlopeUndefinedError(dc.lam, dc.delta0)
    return -dc.lam / dc.delta0


def slope_bound(g: int) -> Fraction:
    """The classical slope bound 6 + 12/(g+1)."""
    return 6 + Fraction(12, g + 1)


def gp_slope_closed(r: int, s: int) -> Fraction:
    """Closed form for the Gieseker-Petri slope, in the symmetric
    variables x = (r+1)+(s+1), y = (r+1)(s+1):

        6 (2x + 7y^2 + 7xy + xy^2 + 12y + y^3) / (y (4+y) (y+1+x))
    """
    if r < 1 or s < 1:
        raise ParameterError(f"need r, s >= 1; got r={r}, s={s}")
    x = (r + 1) + (s + 1)
    y = (r + 1) * (s + 1)
    num = 6 * (2 * x + 7 * y * y + 7 * x * y + x * y * y + 12 * y + y**3)
    den = y * (4 + y) * (y + 1 + x)
    return Fraction(num, den)


def _syzygy_f(i: int, t: int) -> int:
    return (
        (24 * i**2 + i**4 + 16 + 32 * i + 8 * i**3) * t**7
        + (4 * i**3 + i**4 - 16 * i - 16) * t**6
        + (-13 * i**2 - 7 * i**3 + 12 - i**4) * t**5
        + (-(i**2) - 14 * i - i**4 - 24 - 2 * i**3) * t**4
        + (2 * i**2 + 2 * i**3 - 6 * i - 4) * t**3
        + (17 * i**2 + i**3 + 50 * i + 41) * t**2
        + (7 * i**2 + 9 + 18 * i) * t
        + 2
        + 2 * i
    )


def _syzygy_g(i: int, t: int) -> int:
    return (
        (12 * i + i**3 + 8 + 6 * i**2) * t**6
        + (-4 * i + i**3 - 8 + 2 * i**2) * t**5
        + (-2 - 11 * i - i**3 - 7 * i**2) * t**4
        + (-(i**3) + 5 * i) * t**3
        + (5 * i + 1 + 4 * i**2) * t**2
        + (7 * i + 11 + i**2) * t
        + 2
        + 4 * i
    )


def syzygy_slope_closed(i: int, s: int) -> Fraction:
    """Closed-form syzygy slope 6 f(i,t) / (t (i+2) g(i,t)), t = s+1,
    carrying the customary sign (negative for i < 2).

    The coefficient polynomials f and g are as classically tabulated.
    Statements of this formula sometimes carry i-2 instead of i+2 in the
    denominator; that variant agrees with the divisor-class pipeline
    only at i = 0, and there only up to sign, so the pipeline-consistent
    constant i+2 is used for the magnitude while the sign keeps the
    (i-2)-flavored convention: negative below i = 2, positive above.
    The formula is not provided at the i = 2 pole.
    """
    if i == 2:
        raise ParameterError("syzygy slope closed form has a pole at i = 2")
    if i < 0 or s < 0:
        raise ParameterError(f"need i, s >= 0; got i={i}, s={s}")
    t = s + 1
    value = Fraction(6 * _syzygy_f(i, t), t * (i + 2) * _syzygy_g(i, t))
    return -value if i < 2 else value


def secant_plane_validate(r: int, s: int, e: int, k: int) -> bool:
    """Whether an e-secant k-plane condition cuts a virtual divisor:
    (e-k-1)(r-k) = e+1, equivalently rho(e, r-k-1, r) = -1.

    Both forms are evaluated; they agree identically, and the check
    depends on (r, e, k) only (s just fixes the ambient family).
    """
    codim_ok = (e - k - 1) * (r - k) == e + 1
    rho_ok = rho(e, r - k - 1, r) == -1
    assert codim_ok == rho_ok
    return codim_ok


@dataclass(frozen=True)
class FamilyParams:
    """A single divisor-family instance: which family, its (r, s), and
    the extra index (k for hypersurface, i for syzygy)."""

    family: str
    r: int
    s: int
    extra: Optional[int] = None

    @classmethod
    def gp(cls, r: int, s: int) -> "FamilyParams":
        if r < 1 or s < 1:
            raise ParameterError(f"Gieseker-Petri family needs r, s >= 1; got ({r},{s})")
        return cls(GP, r, s)

    @classmethod
    def hypersurface(cls, r: int, s: int, k: int) -> "FamilyParams":
        hypersurface_combo(r, s, k)  # balance check
        return cls(HYPERSURFACE, r, s, k)

    @classmethod
    def syzygy(cls, i: int, s: int) -> "FamilyParams":
        r = (i + 2) * s + 2 * (i + 1)
        if s < 0 or i < 0:
            raise ParameterError(f"syzygy family needs i, s >= 0; got ({i},{s})")
        return cls(SYZYGY, r, s, i)

    @property
    def g(self) -> int:
        return (self.r + 1) * (self.s + 1)

    @property
    def d(self) -> int:
        return self.r * (self.s + 2)

    def grd(self) -> GrdParams:
        return GrdParams(self.g, self.r, self.d)


def family_combo(params: FamilyParams) -> TautCombo:
    if params.family == GP:
        return gp_combo(params.r, params.s)
    if params.family == HYPERSURFACE:
        return hypersurface_combo(params.r, params.s, params.extra)
    if params.family == SYZYGY:
        return syzygy_combo(params.extra, params.s)
    raise ParameterError(f"unknown family {params.family!r}")


@dataclass(frozen=True)
class SlopeReport:
    """Pushforward and slope of one family instance, with the slope
    bound 6 + 12/(g+1) and the strict below-bound verdict."""

    family: str
    r: int
    s: int
    extra: Optional[int]
    g: int
    d: int
    N: int
    pushforward: DivisorClass
    slope: Fraction
    bound: Fraction
    below_bound: bool

    def sort_key(self) -> tuple:
        return (self.family, self.r, self.s, -1 if self.extra is None else self.extra)

    def row(self) -> Dict[str, object]:
        """The flat schema shared by the JSON and CSV emitters:
        family, r, s, extra, g, d, N, slope, bound, below_bound."""
        return {
            "family": self.family,
            "r": self.r,
            "s": self.s,
            "extra": "" if self.extra is None else self.extra,
            "g": self.g,
            "d": self.d,
            "N": str(self.N),
            "slope": format_rational(self.slope),
            "bound": format_rational(self.bound),
            "below_bound": self.below_bound,
        }

    def csv_row(self) -> List[object]:
        """Split-rational CSV row: family, r, s, i_or_k, g, d, N,
        slope_num, slope_den, bound_num, bound_den, below_bound."""
        return [
            self.family,
            self.r,
            self.s,
            "" if self.extra is None else self.extra,
            self.g,
            self.d,
            str(self.N),
            self.slope.numerator,
            self.slope.denominator,
            self.bound.numerator,
            self.bound.denominator,
            self.below_bound,
        ]


CSV_FIELDS = [
    "family",
    "r",
    "s",
    "i_or_k",
    "g",
    "d",
    "N",
    "slope_num",
    "slope_den",
    "bound_num",
    "bound_den",
    "below_bound",
]


def slope_report(params: FamilyParams) -> SlopeReport:
    """Run the full pipeline for one family instance: combo, pushforward,
    slope, bound comparison."""
    combo = family_combo(params)
    grd = params.grd()
    pf = push_combo(combo, grd)
    sl = slope(pf)
    bound = slope_bound(params.g)
    return SlopeReport(
        family=params.family,
        r=params.r,
        s=params.s,
        extra=params.extra,
        g=params.g,
        d=params.d,
        N=grd.N,
        pushforward=pf,
        slope=sl,
        bound=bound,
        below_bound=sl < bound,
    )
