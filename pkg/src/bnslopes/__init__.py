"""Exact computation of divisor-class pushforwards and slopes on moduli
of curves, backed by a self-verifying Schubert-calculus engine.

The package computes, entirely in exact rational arithmetic:

* intersection numbers on Grassmannians (Pieri multiplication, the
  closed form for integrals of powers of the special cycle, and a
  brute-force oracle for it);
* the pushforwards of the tautological classes a, b, c from the moduli
  of linear series with vanishing Brill-Noether number to the pointed
  moduli of stable curves;
* the Gieseker-Petri, hypersurface and syzygy divisor families, their
  slopes, and the closed-form slope polynomials that cross-check them;
* a reconstruction of the pushforward formulas from special one-
  parameter test families, as an independent end-to-end verification.
"""

from .divisors import (
    FamilyParams,
    SlopeReport,
    SlopeUndefinedError,
    family_combo,
    gp_combo,
    gp_slope_closed,
    hypersurface_combo,
    secant_plane_validate,
    slope,
    slope_bound,
    slope_report,
    syzygy_combo,
    syzygy_slope_closed,
)
from .families import (
    CheckReport,
    EpsilonVector,
    M21Class,
    PullbackImages,
    ReconstructionError,
    aspect_counts,
    epsilon_matrix,
    identity_castelnuovo,
    identity_pieri,
    identity_weierstrass_a,
    identity_weierstrass_c,
    pullbacks,
    reconstruct,
    suite_reports,
)
from .numeric import Rational, binomial, factorial, superfactorial
from .schubert import (
    BalanceError,
    ChowClass,
    CodimensionError,
    GrassmannianSpec,
    InvalidIndexError,
    SchubertIndex,
    brute_zeta_integral,
    integral,
    make_index,
    pieri_ek,
    schubert_class,
    zeta,
    zeta_power_integral,
)
from .tautpush import (
    DivisorClass,
    GrdParams,
    ParameterError,
    TautCombo,
    castelnuovo_N,
    push_a,
    push_b,
    push_c,
    push_combo,
    rho,
    rho_zero_triples,
    xi,
)

__version__ = "0.1.0"
