"""Boundary sampling on the infinite polytorus and vertical-line averages.

A Dirichlet symbol evaluated "at the boundary" means: replace each
p_j^{-s} by an independent uniform unimodular character value chi_j.
Every distributional quantity here — the measure of the level set

    E_delta = { chi : |phi*(chi) - c| < delta * r },

the constant it induces in the pointwise upper bound, and the Monte
Carlo identity ||f o phi||^2 = E |f(phi*(chi))|^2 — is estimated from
such samples, with binomial or empirical-variance confidence radii
reported alongside.

Sampling is bit-for-bit reproducible: a counter-based generator keyed
by (seed, coordinate) drives each torus coordinate on its own stream,
so estimates do not depend on evaluation order or chunking.

Vertical-line versions (`ergodic_measure`, `curve_trace`) average over
t in [-T, T] instead; the flow t -> (p_j^{-it})_j equidistributes over
the polytorus, so the two kinds of averages agree in the limit, which
the tests check at matched tolerances.

Inner-factor symbols: g(s) = exp(-sum_j lambda_j (e^{i theta_j} + p_j^{-s})
/ (e^{i theta_j} - p_j^{-s})) is inner for summable nonnegative lambda;
pushing it through the disc automorphism (g - g(inf)) / (1 - g(inf) g)
and framing by D(c, r) gives symbols whose boundary values fill the
frame circle — the equality case of the subordination principle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .affine import AffineSymbol, PolynomialSymbol, in_gordon_hedenmalm
from .dseries import Character, DirichletPoly, evaluate
from .primes import exponents_over, first_primes

__all__ = [
    "SamplePlan",
    "MeasureResult",
    "sample_characters",
    "boundary_value",
    "measure_E_delta",
    "shapiro_constant",
    "ergodic_measure",
    "curve_trace",
    "mc_comp_norm_sq",
    "InnerSymbolParams",
    "inner_boundary_modulus",
    "inner_truncation_bound",
    "mobius_symbol_value",
]

_CHUNK = 1 << 19


@dataclass(frozen=True)
class SamplePlan:
    """How many boundary characters to draw, from which seed, in how
    many torus coordinates.  Identical plans give identical samples."""

    n_samples: int
    seed: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n_samples, (int, np.integer)) or self.n_samples < 1:
            raise ValueError("n_samples must be a positive integer")
        if not isinstance(self.seed, (int, np.integer)) or not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ValueError("d must be a positive integer")


class MeasureResult(NamedTuple):
    estimate: float
    ci95: float


def sample_characters(plan: SamplePlan) -> np.ndarray:
    """Unit-modulus samples, shape (d, n_samples).

    Coordinate j uses the counter-based stream keyed (seed, j), so the
    same (seed, j) always reproduces the same column of phases no
    matter how many coordinates any particular symbol needs.
    """
    out = np.empty((plan.d, plan.n_samples), dtype=complex)
    for j in range(plan.d):
        gen = np.random.Generator(np.random.Philox(key=[plan.seed, j]))
        theta = gen.uniform(0.0, 2.0 * math.pi, plan.n_samples)
        out[j] = np.exp(1j * theta)
    return out


# --- symbol dispatch ------------------------------------------------------

def _frame(phi) -> tuple[complex, float]:
    if isinstance(phi, AffineSymbol):
        return (phi.c, phi.r)
    if isinstance(phi, PolynomialSymbol):
        return (phi.c, phi.radius)
    if isinstance(phi, InnerSymbolParams):
        return (phi.c, phi.r)
    raise TypeError(f"not a boundary-sampleable symbol: {phi!r}")


def _required_dim(phi) -> int:
    d = phi.d
    return max(int(d), 1)


def _boundary_batch(phi, Z: np.ndarray) -> np.ndarray:
    """phi*(chi) for a batch of character samples Z of shape (d, m)."""
    if isinstance(phi, AffineSymbol):
        eff = np.array(phi.effective_coeffs(), dtype=complex)
        if eff.size == 0:
            return np.full(Z.shape[1], phi.c, dtype=complex)
        return phi.c + eff @ Z[: eff.size]
    if isinstance(phi, PolynomialSymbol):
        d = phi.d
        out = np.full(Z.shape[1], phi.c, dtype=complex)
        primes = first_primes(d)
        for n, a in phi.terms.items():
            expo = exponents_over(n, primes)
            term = np.full(Z.shape[1], a, dtype=complex)
            for j, e in enumerate(expo):
                if e:
                    term = term * Z[j] ** e
            out += term
        return out
    if isinstance(phi, InnerSymbolParams):
        g = _inner_g_batch(phi, Z)
        ginf = phi.g_infinity
        return phi.c + phi.r * (g - ginf) / (1.0 - ginf * g)
    raise TypeError(f"not a boundary-sampleable symbol: {phi!r}")


def _line_batch(phi, t: np.ndarray) -> np.ndarray:
    """phi(it) along the imaginary axis."""
    if isinstance(phi, AffineSymbol):
        primes = phi.primes
        eff = phi.effective_coeffs()
        out = np.full(t.shape, phi.c, dtype=complex)
        for p, cj in zip(primes, eff):
            out += cj * np.exp(-1j * t * math.log(p))
        return out
    if isinstance(phi, PolynomialSymbol):
        out = np.full(t.shape, phi.c, dtype=complex)
        for n, a in phi.terms.items():
            out += a * np.exp(-1j * t * math.log(n))
        return out
    if isinstance(phi, InnerSymbolParams):
        Z = np.stack([
            np.exp(-1j * t * math.log(p)) for p in first_primes(phi.d)
        ])
        return _boundary_batch(phi, Z)
    raise TypeError(f"not a line-traceable symbol: {phi!r}")


def boundary_value(phi, chi: Character | Sequence[complex]) -> complex:
    """phi*(chi) for a single character."""
    vals = chi.values if isinstance(chi, Character) else tuple(complex(v) for v in chi)
    d = _required_dim(phi)
    if len(vals) < d:
        raise ValueError(f"character has {len(vals)} coordinates, symbol needs {d}")
    Z = np.array(vals[:d], dtype=complex).reshape(d, 1)
    return complex(_boundary_batch(phi, Z)[0])


# --- measures -------------------------------------------------------------

def measure_E_delta(phi, delta: float, plan: SamplePlan) -> MeasureResult:
    """Fraction of boundary characters with |phi* - c| < delta * r,
    with a binomial 95% confidence radius."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    c, r = _frame(phi)
    if not r > 0.0:
        raise ValueError("level-set measures need a nondegenerate frame radius")
    d = _required_dim(phi)
    if plan.d != d:
        raise ValueError(f"plan has d={plan.d}, symbol needs d={d}")
    n = plan.n_samples
    hits = 0
    done = 0
    Z = sample_characters(plan)
    for i in range(0, n, _CHUNK):
        blk = Z[:, i : i + _CHUNK]
        vals = _boundary_batch(phi, blk)
        hits += int(np.count_nonzero(np.abs(vals - c) < delta * r))
        done += blk.shape[1]
    est = hits / n
    ci = 1.96 * math.sqrt(max(est * (1.0 - est), 0.0) / n)
    return MeasureResult(est, ci)


def shapiro_constant(phi, delta: float, plan: SamplePlan) -> float:
    """C_delta = (1/2) (1-delta)/(1+delta) m(E_delta): the weight the
    level set lends to the point evaluation in the pointwise bound."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    if delta == 1.0:
        return 0.0
    est, _ = measure_E_delta(phi, delta, plan)
    return 0.5 * (1.0 - delta) / (1.0 + delta) * est


def ergodic_measure(phi, delta: float, T: float, steps: int) -> float:
    """Fraction of t in [-T, T] (uniform grid) with |phi(it) - c| < delta * r."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    if not T > 0.0 or steps < 2:
        raise ValueError("need T > 0 and at least 2 grid points")
    c, r = _frame(phi)
    if not r > 0.0:
        raise ValueError("level-set measures need a nondegenerate frame radius")
    t = np.linspace(-T, T, int(steps))
    hits = 0
    for i in range(0, t.size, _CHUNK):
        vals = _line_batch(phi, t[i : i + _CHUNK])
        hits += int(np.count_nonzero(np.abs(vals - c) < delta * r))
    return hits / t.size


def curve_trace(phi, t_min: float, t_max: float, steps: int) -> np.ndarray:
    """The boundary curve phi(it) sampled on a uniform grid: an array of
    rows (t, Re phi(it), Im phi(it)), steps+1 of them."""
    if not t_max > t_min:
        raise ValueError("need t_max > t_min")
    if steps < 1:
        raise ValueError("need at least one step")
    t = np.linspace(t_min, t_max, int(steps) + 1)
    out = np.empty((t.size, 3))
    out[:, 0] = t
    for i in range(0, t.size, _CHUNK):
        vals = _line_batch(phi, t[i : i + _CHUNK])
        out[i : i + _CHUNK, 1] = vals.real
        out[i : i + _CHUNK, 2] = vals.imag
    return out


def mc_comp_norm_sq(phi, f: DirichletPoly, plan: SamplePlan) -> MeasureResult:
    """Monte Carlo ||f o phi||^2 = E |f(phi*(chi))|^2 with a 95% radius.

    Valid because the boundary-character distribution is the Haar
    measure the composition norm integrates against.
    """
    d = _required_dim(phi)
    if plan.d != d:
        raise ValueError(f"plan has d={plan.d}, symbol needs d={d}")
    if isinstance(phi, AffineSymbol) and not in_gordon_hedenmalm(phi):
        raise ValueError("Monte Carlo norms require a symbol in the bounded class")
    Z = sample_characters(plan)
    n = plan.n_samples
    total = 0.0
    total_sq = 0.0
    for i in range(0, n, _CHUNK):
        blk = Z[:, i : i + _CHUNK]
        pts = _boundary_batch(phi, blk)
        v = np.abs(evaluate(f, pts)) ** 2
        total += float(np.sum(v))
        total_sq += float(np.sum(v * v))
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0)
    ci = 1.96 * math.sqrt(var / n)
    return MeasureResult(mean, ci)


# --- inner-factor symbols -------------------------------------------------

@dataclass(frozen=True)
class InnerSymbolParams:
    """Parameters of g(s) = exp(-sum_j lambda_j M(chi-rotated p_j^{-s};
    theta_j)) with M(z; theta) = (e^{i theta} + z)/(e^{i theta} - z),
    framed by the disc D(c, r).

    Nonnegative summable lambdas make g inner with g(+inf) =
    exp(-sum lambda_j); `lambda_tail` carries the certified mass of any
    truncated-away tail of the lambda sequence, which feeds the error
    bound reported by the evaluation routines.
    """

    lambdas: tuple[float, ...]
    thetas: tuple[float, ...]
    c: complex = 1.5 + 0.0j
    r: float = 1.0
    lambda_tail: float = 0.0

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lambdas)
        th = tuple(float(x) for x in self.thetas)
        if len(lam) != len(th):
            raise ValueError("lambdas and thetas must have equal length")
        if any(x < 0.0 for x in lam):
            raise ValueError("lambdas must be nonnegative")
        if not float(self.lambda_tail) >= 0.0:
            raise ValueError("lambda_tail must be nonnegative")
        cc = complex(self.c)
        rr = float(self.r)
        if not (rr > 0.0 and cc.real - 0.5 >= rr - 1e-12):
            raise ValueError("frame disc needs Re c - 1/2 >= r > 0")
        object.__setattr__(self, "lambdas", lam)
        object.__setattr__(self, "thetas", th)
        object.__setattr__(self, "c", cc)
        object.__setattr__(self, "r", rr)
        object.__setattr__(self, "lambda_tail", float(self.lambda_tail))

    @property
    def d(self) -> int:
        return len(self.lambdas)

    @property
    def g_infinity(self) -> float:
        return math.exp(-sum(self.lambdas))


def _inner_g_batch(params: InnerSymbolParams, Z: np.ndarray, sigma: float = 0.0) -> np.ndarray:
    """g evaluated on character samples at vertical position sigma >= 0."""
    primes = first_primes(params.d)
    m = Z.shape[1]
    S = np.zeros(m, dtype=complex)
    for j, (lam, th) in enumerate(zip(params.lambdas, params.thetas)):
        if lam == 0.0:
            continue
        pole = complex(math.cos(th), math.sin(th))
        z = Z[j] * float(primes[j]) ** (-sigma)
        S += lam * (pole + z) / (pole - z)
    return np.exp(-S)


def inner_boundary_modulus(params: InnerSymbolParams, chi, sigma: float) -> float:
    """|g| at distance sigma from the boundary along the character chi.

    Tends to 1 as sigma -> 0+ (inner) and to exp(-sum lambda_j) as
    sigma -> +inf.  A character landing within 1e-12 of a pole of one
    Blaschke-type factor is rejected.
    """
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    vals = chi.values if isinstance(chi, Character) else tuple(complex(v) for v in chi)
    if len(vals) < params.d:
        raise ValueError(f"character has {len(vals)} coordinates, need {params.d}")
    primes = first_primes(params.d)
    S = 0.0 + 0.0j
    for j, (lam, th) in enumerate(zip(params.lambdas, params.thetas)):
        pole = complex(math.cos(th), math.sin(th))
        z = complex(vals[j]) * float(primes[j]) ** (-sigma)
        if abs(pole - z) < 1e-12:
            raise ValueError(f"character coordinate {j} is within 1e-12 of the factor pole")
        S += lam * (pole + z) / (pole - z)
    return math.exp(-S.real)


def inner_truncation_bound(params: InnerSymbolParams, sigma: float) -> float:
    """Bound on |log g_true - log g| from the truncated-away lambda tail:
    each omitted factor contributes at most 2 lambda_j / dist, and at
    vertical position sigma every omitted z has modulus at most
    p_{J+1}^{-sigma}."""
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    if params.lambda_tail == 0.0:
        return 0.0
    p_next = first_primes(params.d + 1)[params.d]
    dist = 1.0 - float(p_next) ** (-sigma)
    return 2.0 * params.lambda_tail / dist


def mobius_symbol_value(params: InnerSymbolParams, chi, sigma: float) -> complex:
    """Value of the framed symbol c + r (g - g_inf)/(1 - g_inf g) at
    vertical position sigma along the character chi.

    Sends +infinity to c; the image stays inside D(c, r), reaching the
    frame circle exactly in the boundary limit sigma -> 0+.
    """
    if not sigma > 0.0:
        raise ValueError("sigma must be positive")
    vals = chi.values if isinstance(chi, Character) else tuple(complex(v) for v in chi)
    if len(vals) < params.d:
        raise ValueError(f"character has {len(vals)} coordinates, need {params.d}")
    Z = np.array(vals[: params.d], dtype=complex).reshape(params.d, 1)
    g = complex(_inner_g_batch(params, Z, sigma)[0])
    ginf = params.g_infinity
    return params.c + params.r * (g - ginf) / (1.0 - ginf * g)
